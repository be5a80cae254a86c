import logging

from django.conf import settings
from rest_framework import status, permissions
from rest_framework.decorators import api_view, permission_classes
from rest_framework.response import Response

from knot_algebra.exceptions import KnotAlgebraError
from knotgraph.matrix import conway_number_from_poly
from .closed_forms import FamilyId, FamilyName, family_poly, torus_factored_form, crossing_count
from .serializers import FamilyQuerySerializer

logger = logging.getLogger(__name__)


def family_record(family):
    """Polynomial, Conway number and crossing count of one family member."""
    poly = family_poly(family)
    crossings = crossing_count(family)
    return {
        'family': family.name.value,
        'params': list(family.params),
        'polynomial': str(poly),
        'conway': conway_number_from_poly(poly, crossings),
        'crossings': crossings,
    }


@api_view(['GET'])
@permission_classes([permissions.AllowAny])
def family_poly_view(request):
    """Closed-form polynomial of a ribbon family member"""
    serializer = FamilyQuerySerializer(data=request.query_params)
    if not serializer.is_valid():
        return Response({'error': serializer.errors}, status=status.HTTP_400_BAD_REQUEST)

    family = serializer.validated_data['family']
    if crossing_count(family) > settings.KNOT_MAX_CROSSINGS:
        return Response(
            {'error': f"{crossing_count(family)} crossings exceeds the limit of {settings.KNOT_MAX_CROSSINGS}"},
            status=status.HTTP_400_BAD_REQUEST
        )
    try:
        return Response(family_record(family))
    except KnotAlgebraError as e:
        logger.error(f"Family {family} failed: {e}")
        return Response({'error': str(e)}, status=status.HTTP_400_BAD_REQUEST)


@api_view(['GET'])
@permission_classes([permissions.AllowAny])
def torus_view(request, v):
    """Cyclic torus closed form next to its factored form"""
    if v < 1 or v > settings.KNOT_MAX_CROSSINGS:
        return Response(
            {'error': f"v must be between 1 and {settings.KNOT_MAX_CROSSINGS}"},
            status=status.HTTP_400_BAD_REQUEST
        )
    closed = family_poly(FamilyId(FamilyName.CYCLIC_TORUS, (v,)))
    factored = torus_factored_form(v)
    return Response({
        'v': v,
        'closed_form': str(closed),
        'factored': str(factored),
        'equal': closed == factored,
    })
