from rest_framework import serializers

from families.serializers import parse_int_list
from knot_algebra.exceptions import KnotAlgebraError
from .functions import parse_conway_function


class BracketQuerySerializer(serializers.Serializer):
    a = serializers.CharField()

    def validate_a(self, value):
        values = parse_int_list(value)
        if not values:
            raise serializers.ValidationError("a Gauss bracket needs at least one ribbon")
        return values


class EvaluateSerializer(serializers.Serializer):
    function = serializers.CharField()
    a = serializers.CharField()

    def validate_a(self, value):
        return parse_int_list(value)

    def validate(self, attrs):
        try:
            attrs['conway_function'] = parse_conway_function(attrs['function'], len(attrs['a']))
        except KnotAlgebraError as e:
            raise serializers.ValidationError(str(e))
        return attrs
