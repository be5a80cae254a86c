import csv
import io
import json
from unittest import mock

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase

from .suites import run_suite

TREFOIL = 'O1 U2 O3 U1 O2 U3'


def run(*args):
    out = io.StringIO()
    call_command(*args, stdout=out)
    return out.getvalue().strip()


class DiagramCommandTestCase(SimpleTestCase):
    def test_charpoly_gauss(self):
        """Test charpoly of the trefoil code"""
        self.assertEqual(run('charpoly', '--gauss', TREFOIL), 'x^3 - 3*x - 2')

    def test_charpoly_json(self):
        """Test JSON output of charpoly"""
        record = json.loads(run('charpoly', '--spec', 'torus:3', '--format', 'json'))
        self.assertEqual(record['polynomial'], 'x^3 - 3*x - 2')
        self.assertEqual(record['crossings'], 3)

    def test_charpoly_csv(self):
        """Test CSV output of charpoly"""
        rows = list(csv.DictReader(io.StringIO(run('charpoly', '--spec', 'torus:2', '--format', 'csv'))))
        self.assertEqual(len(rows), 1)
        self.assertEqual(rows[0]['polynomial'], 'x^2 - 4')
        self.assertEqual(rows[0]['crossings'], '2')

    def test_conway(self):
        """Test the Conway number of the 4,3 rational knot and the granny knot"""
        self.assertEqual(run('conway', '--spec', 'rational:4,3'), 'conway=13 crossings=7')
        self.assertEqual(run('conway', '--spec', 'compose(torus:3,torus:3)'), 'conway=9 crossings=6')

    def test_decompose(self):
        """Test the trefoil has one decomposition"""
        output = run('decompose', '--spec', 'torus:3').splitlines()
        self.assertEqual(output[-1], 'count=1')
        self.assertEqual(len(output), 2)

    def test_decompose_json(self):
        """Test JSON output lists each permutation pair with the count"""
        record = json.loads(run('decompose', '--spec', 'torus:3', '--format', 'json'))
        self.assertEqual(record['count'], 1)
        pair = record['decompositions'][0]
        self.assertEqual(sorted(pair['p']), [0, 1, 2])
        self.assertEqual(sorted(pair['q']), [0, 1, 2])

    def test_components(self):
        """Test component counts of Hopf and the trefoil"""
        self.assertEqual(run('components', '--spec', 'torus:2'), '2')
        self.assertEqual(run('components', '--gauss', TREFOIL), '1')

    def test_components_json(self):
        """Test JSON output gives each walk as (row, col, copy) triples"""
        record = json.loads(run('components', '--spec', 'torus:3', '--format', 'json'))
        self.assertEqual(record['count'], 1)
        (cycle,) = record['cycles']
        self.assertEqual(len(cycle), 6)
        self.assertTrue(all(len(edge) == 3 for edge in cycle))

    def test_components_verbose_cycles(self):
        """Test the verbose walk prints copy indices"""
        lines = run('components', '--spec', 'torus:2', '--verbose-cycles').splitlines()
        self.assertEqual(lines[-1], '2')
        self.assertEqual(len(lines), 3)
        self.assertRegex(lines[0], r'^\(\d+,\d+,\d+\)')

    def test_syntax_error(self):
        """Test a bad token exits with status 2 and names the token"""
        with self.assertRaises(CommandError) as ctx:
            run('charpoly', '--gauss', 'O1 X2')
        self.assertEqual(ctx.exception.returncode, 2)
        self.assertIn('X2', str(ctx.exception))

    def test_non_alternating(self):
        """Test non-alternating codes exit with status 2"""
        with self.assertRaises(CommandError) as ctx:
            run('conway', '--gauss', 'O1 O2 U1 U2')
        self.assertEqual(ctx.exception.returncode, 2)

    def test_charpoly_non_alternating(self):
        """Test charpoly also refuses a non-alternating code with status 2"""
        with self.assertRaises(CommandError) as ctx:
            run('charpoly', '--gauss', 'O1 O2 U1 U2')
        self.assertEqual(ctx.exception.returncode, 2)

    def test_bad_crossing_use(self):
        """Test a crossing passed over twice exits with status 2"""
        with self.assertRaises(CommandError) as ctx:
            run('charpoly', '--gauss', 'O1 U2 O1 U2')
        self.assertEqual(ctx.exception.returncode, 2)

    def test_missing_source(self):
        """Test an input source is required"""
        with self.assertRaises(CommandError):
            run('charpoly')


class FamilyCommandTestCase(SimpleTestCase):
    def test_family_poly(self):
        """Test the Hopf member of the two-ribbon family"""
        self.assertEqual(run('family', 'poly', '--name', 'TwoRibbon', '--params', '1,1'), 'x^2 - 4')

    def test_family_json(self):
        """Test JSON output carries the Conway number"""
        record = json.loads(run('family', 'poly', '--name', 'ThreeRibbonMixed', '--params', '2,2,1', '--format', 'json'))
        self.assertEqual(record['polynomial'], 'x^5 - 2*x^3 - 4*x^2')
        self.assertEqual(record['conway'], 8)

    def test_family_errors(self):
        """Test unknown families and bad parameters exit with status 2"""
        with self.assertRaises(CommandError) as ctx:
            run('family', 'poly', '--name', 'FourRibbon', '--params', '1')
        self.assertEqual(ctx.exception.returncode, 2)
        with self.assertRaises(CommandError) as ctx:
            run('family', 'poly', '--name', 'TwoRibbon', '--params', 'a,b')
        self.assertEqual(ctx.exception.returncode, 2)


class ConwayCommandTestCase(SimpleTestCase):
    def test_catalog_json(self):
        """Test the three-ribbon catalog dump"""
        records = json.loads(run('catalog', '--ribbons', '3', '--json'))
        self.assertEqual(len(records), 2)
        self.assertEqual(set(records[0]), {'ribbons', 'terms', 'representative', 'rational'})
        self.assertEqual(records[0]['ribbons'], 3)
        self.assertEqual(records[0]['terms'], [[1, 2], [1, 3], [2, 3]])
        self.assertFalse(records[0]['rational'])
        self.assertTrue(records[1]['rational'])
        self.assertEqual(json.loads(run('catalog', '--ribbons', '3', '--format', 'json')), records)

    def test_catalog_csv(self):
        """Test the CSV catalog carries the term counts"""
        rows = list(csv.DictReader(io.StringIO(run('catalog', '--ribbons', '3', '--format', 'csv'))))
        self.assertEqual([row['term_count'] for row in rows], ['3', '3'])
        self.assertEqual(rows[0]['function'], '+a1*a2 +a1*a3 +a2*a3')

    def test_catalog_plain(self):
        """Test one plain line per family"""
        self.assertEqual(len(run('catalog', '--ribbons', '5').splitlines()), 12)

    def test_catalog_out_of_range(self):
        """Test ribbon counts without data exit with status 2"""
        with self.assertRaises(CommandError) as ctx:
            run('catalog', '--ribbons', '6')
        self.assertEqual(ctx.exception.returncode, 2)

    def test_bracket(self):
        """Test the bracket of (2, 1, 2)"""
        self.assertEqual(run('bracket', '--a', '2,1,2'), '8/3')
        self.assertEqual(run('bracket', '--a', '4,3'), '13/3')

    def test_bracket_rejects_non_positive(self):
        """Test ribbon lengths below 1 exit with status 2 and name the value"""
        for value in ('0', '-3'):
            with self.assertRaises(CommandError) as ctx:
                run('bracket', '--a', f'2,{value}')
            self.assertEqual(ctx.exception.returncode, 2)
            self.assertIn(value, str(ctx.exception))

    def test_family_rejects_non_positive(self):
        """Test family parameters below 1 exit with status 2"""
        with self.assertRaises(CommandError) as ctx:
            run('family', 'poly', '--name', 'TwoRibbon', '--params', '0,1')
        self.assertEqual(ctx.exception.returncode, 2)


class VerifyCommandTestCase(SimpleTestCase):
    def test_recurrences(self):
        """Test the recurrence sweep passes"""
        self.assertIn('Suite recurrences passed', run('verify', '--suite', 'recurrences'))

    def test_eq13(self):
        """Test the quartet sweep passes"""
        self.assertIn('passed', run('verify', '--suite', 'eq13'))

    def test_catalog_and_conway(self):
        """Test the catalog and Conway property sweeps find no mismatches"""
        for suite in ('catalog', 'conway'):
            results = run_suite(suite)
            self.assertEqual([m for mismatches in results.values() for m in mismatches], [], suite)

    def test_failure_exit_status(self):
        """Test a mismatch exits with status 1 and is reported"""
        def broken():
            return ['deliberate mismatch']

        with mock.patch.dict('cli.suites.SUITES', {'eq13': (broken,)}):
            out = io.StringIO()
            with self.assertRaises(CommandError) as ctx:
                call_command('verify', '--suite', 'eq13', stdout=out)
        self.assertEqual(ctx.exception.returncode, 1)
        self.assertIn('deliberate mismatch', out.getvalue())
