from django.conf import settings
from django.urls import include, re_path

parafock_urls = [
    re_path('^', include('parafock.report.urls')),
]

if settings.URL_PREFIX.strip('/'):
    urlpatterns = [
        re_path(r'^{0}/'.format(settings.URL_PREFIX.strip('/')), include(parafock_urls)),
    ]
else:
    urlpatterns = parafock_urls
