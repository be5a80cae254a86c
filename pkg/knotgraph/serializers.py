from rest_framework import serializers


class DiagramInputSerializer(serializers.Serializer):
    """Exactly one of a Gauss code or a family spec."""

    gauss = serializers.CharField(required=False, allow_blank=False, trim_whitespace=True)
    spec = serializers.CharField(required=False, allow_blank=False, trim_whitespace=True)

    def validate(self, attrs):
        if ('gauss' in attrs) == ('spec' in attrs):
            raise serializers.ValidationError("Provide exactly one of 'gauss' or 'spec'.")
        return attrs

