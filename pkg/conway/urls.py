from django.urls import path
from . import views

app_name = 'conway'

urlpatterns = [
    path('catalog/<int:n>/', views.catalog_view, name='catalog'),
    path('bracket/', views.bracket_view, name='bracket'),
    path('evaluate/', views.evaluate_view, name='evaluate'),
]
