import logging
from fractions import Fraction

from rest_framework import status, permissions
from rest_framework.decorators import api_view, permission_classes
from rest_framework.response import Response

from knot_algebra.exceptions import KnotAlgebraError
from .catalog import catalog
from .functions import gauss_bracket_numerator, gauss_bracket_denominator
from .serializers import BracketQuerySerializer, EvaluateSerializer

logger = logging.getLogger(__name__)


@api_view(['GET'])
@permission_classes([permissions.AllowAny])
def catalog_view(request, n):
    """Conway functions of every family with n ribbons"""
    try:
        entries = catalog(n)
    except KnotAlgebraError as e:
        return Response({'error': str(e)}, status=status.HTTP_400_BAD_REQUEST)

    results = []
    for entry in entries:
        record = entry.to_json()
        record['function'] = str(entry.function)
        record['term_count'] = entry.term_count()
        record['all_ones'] = entry.function.all_ones()
        results.append(record)
    return Response({'ribbons': n, 'count': len(results), 'results': results})


@api_view(['GET'])
@permission_classes([permissions.AllowAny])
def bracket_view(request):
    """Gauss bracket of a ribbon vector as numerator, denominator and reduced fraction"""
    serializer = BracketQuerySerializer(data=request.query_params)
    if not serializer.is_valid():
        return Response({'error': serializer.errors}, status=status.HTTP_400_BAD_REQUEST)

    a = serializer.validated_data['a']
    numerator = gauss_bracket_numerator(a)
    denominator = gauss_bracket_denominator(a)
    if denominator == 0:
        return Response({'error': f"bracket of {a} has a zero denominator"}, status=status.HTTP_400_BAD_REQUEST)
    return Response({
        'a': a,
        'numerator': numerator,
        'denominator': denominator,
        'fraction': str(Fraction(numerator, denominator)),
    })


@api_view(['POST'])
@permission_classes([permissions.AllowAny])
def evaluate_view(request):
    """Evaluate a Conway function written as ``+a1*a2 +a3`` at a ribbon vector"""
    serializer = EvaluateSerializer(data=request.data)
    if not serializer.is_valid():
        return Response({'error': serializer.errors}, status=status.HTTP_400_BAD_REQUEST)

    function = serializer.validated_data['conway_function']
    try:
        value = function.evaluate(serializer.validated_data['a'])
    except KnotAlgebraError as e:
        logger.error(f"Evaluation of {function} failed: {e}")
        return Response({'error': str(e)}, status=status.HTTP_400_BAD_REQUEST)
    return Response({'function': str(function), 'value': value, 'term_count': function.term_count()})
