import csv
import io
import json
import logging

from django.core.management.base import CommandError

from diagrams.utils import resolve_input
from knot_algebra.exceptions import KnotAlgebraError

logger = logging.getLogger(__name__)

FORMATS = ('plain', 'json', 'csv')

USAGE_ERROR = 2
VERIFICATION_FAILED = 1


def add_input_arguments(parser):
    """--gauss / --spec, exactly one of them."""
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument('--gauss', help='Gauss code such as "O1 U2 O3 U1 O2 U3"')
    group.add_argument('--spec', help='Family spec such as "rational:4,3" or "compose(torus:3,torus:3)"')


def add_format_argument(parser):
    parser.add_argument('--format', choices=FORMATS, default='plain', help='Output format')


def usage_error(error):
    logger.error(f"{type(error).__name__}: {error}")
    return CommandError(str(error), returncode=USAGE_ERROR)


def resolve_options(options):
    """Build the matrix for the --gauss or --spec option, failing with exit status 2."""
    try:
        return resolve_input(gauss=options.get('gauss'), spec=options.get('spec'))
    except KnotAlgebraError as e:
        raise usage_error(e)


def parse_int_list_option(text, name, minimum=1):
    """Comma-separated integers, each at least ``minimum``."""
    try:
        values = [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise CommandError(f"--{name} expects comma-separated integers, got {text!r}", returncode=USAGE_ERROR)
    if not values:
        raise CommandError(f"--{name} needs at least one value", returncode=USAGE_ERROR)
    for value in values:
        if value < minimum:
            raise CommandError(f"--{name} values must be at least {minimum}, got {value}", returncode=USAGE_ERROR)
    return values


def render(records, fmt, plain, many=False):
    """
    Format a list of flat dict records.

    Args:
        records: list of dicts sharing the same keys
        fmt: 'plain', 'json' or 'csv'
        plain: callable turning one record into its plain-text line
        many: keep a JSON list even for a single record

    Returns:
        str without a trailing newline
    """
    if fmt == 'json':
        return json.dumps(records if many else records[0], indent=2)
    if fmt == 'csv':
        if not records:
            return ''
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=list(records[0]), lineterminator='\n')
        writer.writeheader()
        for record in records:
            writer.writerow({k: _csv_cell(v) for k, v in record.items()})
        return buffer.getvalue().rstrip('\n')
    return "\n".join(plain(record) for record in records)


def _csv_cell(value):
    if isinstance(value, (list, tuple)):
        return " ".join(str(v) for v in value)
    return value
