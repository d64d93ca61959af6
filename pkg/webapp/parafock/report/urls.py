from django.urls import re_path

from . import views

urlpatterns = [
    re_path(r'^verify/?$', views.verifyView, name='verify'),
    re_path(r'^spectrum/?$', views.spectrumView, name='spectrum'),
    re_path(r'^uncertainty/?$', views.uncertaintyView, name='uncertainty'),
    re_path(r'^measure/?$', views.measureView, name='measure'),
    re_path(r'^limit/?$', views.limitView, name='limit'),
]
