"""
Command line front end. Every command takes JSON arguments and prints one
JSON object on stdout; errors go to stderr with exit code 1 (malformed input)
or 2 (mathematical precondition).
"""
import json
import logging
import sys
from typing import Callable, Dict, Optional, Tuple

import click

from . import config
from .affine_line import classify_affine_point, is_analytic
from .classification import classify_on_Z, is_nonarchimedean
from .errors import ParseError, SpehError
from .models import (
    AdeleSpec,
    DomainSpec,
    ElementSpec,
    PlaceSpec,
    RingSpec,
    ValueSpec,
    fraction,
    integer_field,
    optional_int,
    require,
)
from .places import ARCH_LINE_KINDS, FP_KINDS, PADIC_LINE_KINDS, evaluate
from .retraction import huber_retract
from .sheaf import adele_add, adele_diagonal, adele_mul, germ_at, sections_on_domain
from .spectra import SpehPoint, domain_membership, enumerate_members, residue_field_at, speh_points_of_Z
from .suites import check_suites

logger = logging.getLogger(__name__)

_AFFINE_KINDS = PADIC_LINE_KINDS + ARCH_LINE_KINDS + FP_KINDS


def _classify(args: dict) -> dict:
    place = PlaceSpec.parse(require(args, 'place'))
    z_class = classify_on_Z(place, optional_int(args, 'primeBound', None))
    out = {'on_Z': z_class.tag.value, 'p': z_class.p, 'nonarchimedean': is_nonarchimedean(place)}
    if place.kind in _AFFINE_KINDS:
        point = classify_affine_point(place)
        verdict = is_analytic(point)
        out.update(affine_point=point.kind.name.lower(), analytic=verdict.analytic,
                   reason=verdict.reason.value)
    return out


def _eval(args: dict) -> dict:
    place = PlaceSpec.parse(require(args, 'place'))
    value = evaluate(place, ElementSpec.parse(require(args, 'elem')))
    return {'value': ValueSpec.compact(value)}


def _domain(args: dict) -> dict:
    domain = DomainSpec.parse(require(args, 'domain'))
    if args.get('point') is not None:
        return {'member': domain_membership(PlaceSpec.parse(args['point']), domain)}
    members = enumerate_members(domain, optional_int(args, 'primeBound', 50))
    return {'members': [PlaceSpec.dump(x.place) for x in members]}


def _spectrum(args: dict) -> dict:
    points = speh_points_of_Z(optional_int(args, 'primeBound', 10))
    return {'count': len(points), 'points': [PlaceSpec.dump(x.place) for x in points]}


def _germ(args: dict) -> dict:
    point = SpehPoint(PlaceSpec.parse(require(args, 'point')))
    return {'germ': RingSpec.dump(germ_at(point)), 'residue_field': residue_field_at(point)}


def _sections(args: dict) -> dict:
    return {'sections': RingSpec.dump(sections_on_domain(DomainSpec.parse(require(args, 'domain'))))}


def _check(args: dict) -> dict:
    suite = args.get('suite')
    try:
        return check_suites(
            optional_int(args, 'seed', config.DEFAULT_SEED),
            optional_int(args, 'trials', config.DEFAULT_TRIALS),
            [suite] if suite else None,
        )
    except KeyError as e:
        raise ParseError(str(e))


def _adele(args: dict) -> dict:
    precision = optional_int(args, 'precision', config.DEFAULT_PRECISION)
    op = args.get('op')
    if op is None:
        q = fraction(require(args, 'q'), 'q')
        return AdeleSpec.dump(adele_diagonal(q, integer_field(args, 'm'), precision))
    if op not in ('add', 'mul'):
        raise ParseError(f"unknown adele operation {op!r}")
    x, y = AdeleSpec.parse(require(args, 'x')), AdeleSpec.parse(require(args, 'y'))
    return AdeleSpec.dump(adele_add(x, y) if op == 'add' else adele_mul(x, y))


def _retract(args: dict) -> dict:
    return {'place': PlaceSpec.dump(huber_retract(PlaceSpec.parse(require(args, 'place'))))}


COMMANDS: Dict[str, Callable[[dict], dict]] = {
    'classify': _classify,
    'eval': _eval,
    'domain': _domain,
    'spectrum': _spectrum,
    'germ': _germ,
    'sections': _sections,
    'check': _check,
    'adele': _adele,
    'retract': _retract,
}


def run(command: str, args: Optional[dict]) -> Tuple[dict, int]:
    """Dispatch one request; returns (JSON payload, exit code)."""
    try:
        if command not in COMMANDS:
            raise ParseError(f"unknown command {command!r}")
        if not isinstance(args, dict):
            raise ParseError("arguments must be a JSON object")
        return COMMANDS[command](args), 0
    except SpehError as e:
        logger.debug(f"{command} failed: {e}")
        return e.to_dict(), e.exit_code


def dumps(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, ensure_ascii=False)


def _load(name: str, text: Optional[str]):
    if text is None:
        return None
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"--{name} is not valid JSON: {e}")


def _respond(command: str, **options) -> None:
    try:
        args = {}
        for key, value in options.items():
            if value is None:
                continue
            args[key] = _load(key, value) if isinstance(value, str) and key in _JSON_OPTIONS else value
        payload, code = run(command, args)
    except ParseError as e:
        payload, code = e.to_dict(), e.exit_code
    if code:
        click.echo(dumps(payload), err=True)
        sys.exit(code)
    click.echo(dumps(payload))


_JSON_OPTIONS = ('place', 'elem', 'domain', 'point', 'x', 'y')


class SpehGroup(click.Group):
    """Command group whose usage errors share the malformed-input exit code."""

    def main(self, *args, standalone_mode: bool = True, **kwargs):
        try:
            return super().main(*args, standalone_mode=False, **kwargs)
        except click.UsageError as e:
            error = ParseError(e.format_message())
            click.echo(dumps(error.to_dict()), err=True)
            sys.exit(error.exit_code)
        except click.Abort:
            click.echo('Aborted!', err=True)
            sys.exit(ParseError.exit_code)


@click.group(cls=SpehGroup)
@click.option('--verbose', is_flag=True, help='Log progress to stderr.')
def cli(verbose):
    """Halos, generalized seminorms and the analytic spectrum of Z."""
    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if verbose else logging.WARNING,
        format='%(levelname)s %(name)s: %(message)s',
    )


@cli.command()
@click.option('--place', required=True, help='Place as JSON.')
@click.option('--prime-bound', 'primeBound', type=int)
def classify(place, primeBound):
    """Classify a place on Z (and on the affine line)."""
    _respond('classify', place=place, primeBound=primeBound)


@cli.command(name='eval')
@click.option('--place', required=True)
@click.option('--elem', required=True, help='Ring element as JSON.')
def eval_(place, elem):
    """Evaluate a place on a ring element."""
    _respond('eval', place=place, elem=elem)


@cli.command()
@click.option('--domain', required=True, help='Rational domain as JSON.')
@click.option('--point', help='Place as JSON; omit to list the members.')
@click.option('--prime-bound', 'primeBound', type=int)
def domain(domain, point, primeBound):
    """Test membership in a rational domain."""
    _respond('domain', domain=domain, point=point, primeBound=primeBound)


@cli.command()
@click.option('--prime-bound', 'primeBound', type=int, default=10, show_default=True)
def spectrum(primeBound):
    """List the points of Speh(Z) up to a prime bound."""
    _respond('spectrum', primeBound=primeBound)


@cli.command()
@click.option('--point', required=True)
def germ(point):
    """Germ of the structure sheaf at a point of Speh(Z)."""
    _respond('germ', point=point)


@cli.command()
@click.option('--domain', required=True)
def sections(domain):
    """Sections of the structure sheaf on a rational domain."""
    _respond('sections', domain=domain)


@cli.command()
@click.option('--suite', help='Run a single suite.')
@click.option('--trials', type=int)
@click.option('--seed', type=int)
def check(suite, trials, seed):
    """Run the randomized property suites."""
    _respond('check', suite=suite, trials=trials, seed=seed)


@cli.command()
@click.option('--q', help='Rational to embed diagonally.')
@click.option('--m', type=int, help='The q lies in Z[1/m].')
@click.option('--op', type=click.Choice(['add', 'mul']))
@click.option('--x', help='Adele as JSON.')
@click.option('--y', help='Adele as JSON.')
@click.option('--precision', type=int)
def adele(q, m, op, x, y, precision):
    """Diagonal adeles and adele arithmetic."""
    _respond('adele', q=q, m=m, op=op, x=x, y=y, precision=precision)


@cli.command()
@click.option('--place', required=True)
def retract(place):
    """Huber retraction of a place."""
    _respond('retract', place=place)


def main() -> None:
    cli()
