from rest_framework import serializers

from knot_algebra.exceptions import KnotAlgebraError
from .closed_forms import FamilyId


def parse_int_list(text):
    """'2,1,3' -> [2, 1, 3]"""
    try:
        return [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise serializers.ValidationError(f"expected comma-separated integers, got {text!r}")


class FamilyQuerySerializer(serializers.Serializer):
    name = serializers.CharField()
    params = serializers.CharField()

    def validate_params(self, value):
        return parse_int_list(value)

    def validate(self, attrs):
        try:
            attrs['family'] = FamilyId(attrs['name'], tuple(attrs['params']))
        except KnotAlgebraError as e:
            raise serializers.ValidationError(str(e))
        return attrs
