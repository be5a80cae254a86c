from django.urls import path
from . import views

app_name = 'families'

urlpatterns = [
    path('poly/', views.family_poly_view, name='family-poly'),
    path('torus/<int:v>/', views.torus_view, name='torus'),
]
