import logging

from django.conf import settings
from rest_framework import status, permissions
from rest_framework.decorators import api_view, permission_classes
from rest_framework.response import Response

from conway.invariants import conway_from_resolved
from diagrams.utils import resolve_input
from knot_algebra.exceptions import KnotAlgebraError
from .matrix import char_poly, components, permutation_decompositions
from .serializers import DiagramInputSerializer

logger = logging.getLogger(__name__)


def _resolve(request):
    """Validate the body and build the matrix; returns (resolved, error_response)."""
    serializer = DiagramInputSerializer(data=request.data)
    if not serializer.is_valid():
        return None, Response({'error': serializer.errors}, status=status.HTTP_400_BAD_REQUEST)
    try:
        resolved = resolve_input(
            gauss=serializer.validated_data.get('gauss'),
            spec=serializer.validated_data.get('spec'),
            max_crossings=settings.KNOT_MAX_CROSSINGS,
        )
    except KnotAlgebraError as e:
        logger.error(f"Rejected diagram input: {e}")
        return None, Response({'error': str(e)}, status=status.HTTP_400_BAD_REQUEST)
    return resolved, None


@api_view(['POST'])
@permission_classes([permissions.AllowAny])
def charpoly_view(request):
    """Characteristic polynomial det(xI - M) of a diagram"""
    resolved, error = _resolve(request)
    if error:
        return error
    poly = char_poly(resolved.matrix)
    return Response({
        'polynomial': str(poly),
        'coefficients': list(poly.coefficients),
        'crossings': resolved.crossings,
        'matrix': resolved.matrix.to_json(),
        'gauss': str(resolved.code),
        'pd': resolved.pd(),
    })


@api_view(['POST'])
@permission_classes([permissions.AllowAny])
def conway_view(request):
    """Conway number P'(2)/V of a diagram"""
    resolved, error = _resolve(request)
    if error:
        return error
    try:
        value = conway_from_resolved(resolved)
    except KnotAlgebraError as e:
        logger.error(f"Conway number failed: {e}")
        return Response({'error': str(e)}, status=status.HTTP_400_BAD_REQUEST)
    return Response({'conway': value, 'crossings': resolved.crossings})


@api_view(['POST'])
@permission_classes([permissions.AllowAny])
def components_view(request):
    """Link components found by the row/column walk"""
    resolved, error = _resolve(request)
    if error:
        return error
    cycles = components(resolved.matrix)
    return Response({
        'count': len(cycles) + resolved.loops,
        'cycles': [[list(edge) for edge in cycle] for cycle in cycles],
    })


@api_view(['POST'])
@permission_classes([permissions.AllowAny])
def decompose_view(request):
    """Unordered pairs of permutation matrices summing to the diagram matrix"""
    resolved, error = _resolve(request)
    if error:
        return error
    decompositions = permutation_decompositions(resolved.matrix)
    return Response({
        'count': len(decompositions),
        'decompositions': [d.to_json() for d in decompositions],
    })
