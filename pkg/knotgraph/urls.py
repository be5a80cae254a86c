from django.urls import path
from . import views

app_name = 'knotgraph'

urlpatterns = [
    path('charpoly/', views.charpoly_view, name='charpoly'),
    path('conway/', views.conway_view, name='conway'),
    path('components/', views.components_view, name='components'),
    path('decompose/', views.decompose_view, name='decompose'),
]
