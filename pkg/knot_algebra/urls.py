from django.urls import path, include, re_path
from rest_framework import permissions
from drf_yasg.views import get_schema_view
from drf_yasg import openapi

# API Documentation Schema View
schema_view = get_schema_view(
    openapi.Info(
        title="Alternating Knot Algebra API",
        default_version='v1',
        description="Characteristic polynomials, Conway numbers and ribbon families of alternating knots",
        license=openapi.License(name="BSD License"),
    ),
    public=True,
    permission_classes=[permissions.AllowAny],
)


urlpatterns = [
    path("api/knots/", include('knotgraph.urls')),
    path("api/families/", include('families.urls')),
    path("api/conway/", include('conway.urls')),

    # API Documentation
    re_path(r'^swagger(?P<format>\.json|\.yaml)$', schema_view.without_ui(cache_timeout=0), name='schema-json'),
    re_path(r'^swagger/$', schema_view.with_ui('swagger', cache_timeout=0), name='schema-swagger-ui'),
]
