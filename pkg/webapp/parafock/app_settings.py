# Django settings for the parafock project.
# DO NOT MODIFY THIS FILE DIRECTLY - use local_settings.py instead

#Django settings below, do not touch!
APPEND_SLASH = False

LANGUAGE_CODE = 'en-us'

MIDDLEWARE = (
  'parafock.middleware.LogExceptionsMiddleware',
  'django.middleware.common.CommonMiddleware',
  'django.middleware.gzip.GZipMiddleware',
)

ROOT_URLCONF = 'parafock.urls'

INSTALLED_APPS = (
  'parafock.report',
  'django.contrib.contenttypes',
)

DEFAULT_AUTO_FIELD = 'django.db.models.AutoField'
