from __future__ import annotations
"""Main entry-point to compute the invariants of 2-arrangements from the command line.
Type `python main.py --help` to see the list of available commands"""

import json
from functools import wraps
from pathlib import Path
from typing import Callable

import click
import yaml

from src import env, view
from src.arrangements.catalog import catalog_basis
from src.arrangements.normal_form import (arrangement_depth, bottom_components_d2, count_d2_classes, depth2_normal_form,
                                          enumerate_normal_forms, normal_form_basis, sigma_lists)
from src.arrangements.permutations import format_perm, parse_perm
from src.arrangements.spec import ArrangementSpec, Catalog, Horizontal, parse_spec
from src.braids.free_word import FreeWord
from src.errors import ArrangementError, ComputationError
from src.invariants.alexander import alexander_poly, link_alexander_poly, single_var_poly
from src.invariants.lattice import count_union_points
from src.invariants.subtorus import Subtorus
from src.invariants.torsion import minor_check, tors_count, verify_subtorus
from src.report import build_report, horizontal_perm, parse_ideal
from src.utils.math_utils import parse_int_list


def handle_errors(command: Callable) -> Callable:
    """Turn parse and domain errors into usage errors (exit code 2) and
    inconsistent computations into failures (exit code 1)"""
    @wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except ComputationError as error:
            raise click.ClickException(str(error))
        except ArrangementError as error:
            raise click.UsageError(str(error))
    return wrapper


def read_basis(file: str | None, rank: int) -> tuple[FreeWord, ...] | None:
    """Return the basis words listed in the YAML [file], like [x1, x1 x2, x3]"""
    if file is None:
        return None
    words = yaml.safe_load(Path(file).read_text())
    if not isinstance(words, list):
        raise click.UsageError(f'{file} must hold a YAML list of words')
    return tuple(FreeWord.parse(str(word), rank) for word in words)


def prepare_environment(threads: int) -> None:
    env.THREADS = threads


def echo_json(data: dict) -> None:
    click.echo(json.dumps(data, indent=2))


@click.group()
def cli() -> None:
    """Invariants of arrangements of transverse planes in R^4"""
    pass


@cli.command()
@click.argument('spec')
@click.option('--p', 'primes', default=','.join(map(str, env.DEFAULT_PRIMES)), show_default=True, help='Comma separated primes p for the torsion counts Tors_(p,k)')
@click.option('--k', 'ideals', default=','.join(env.DEFAULT_IDEALS), show_default=True, help='Comma separated ideal indices k, integers or relative to n like n-2')
@click.option('--json', 'as_json', is_flag=True, default=False, help='Print the report as JSON')
@click.option('--threads', default=env.THREADS, type=int, show_default=True, help='Number of threads evaluating torsion grids')
@click.option('--components', is_flag=True, default=False, help='Include the components of V_(n-2) of depth two arrangements')
@handle_errors
def invariants(spec: str, primes: str, ideals: str, as_json: bool, threads: int, components: bool) -> None:
    """Compute the invariants of the arrangement SPEC, like perm:21435, cat:K or xi:n=6;A(2,4)A(1,2)"""
    prepare_environment(threads)
    report = build_report(parse_spec(spec), parse_int_list(primes), ideals.split(','), components=components)
    if as_json:
        echo_json(report.to_json())
    else:
        view.display_report(report)


@cli.command()
@click.argument('spec')
@click.option('--basis', 'basis_file', default=None, type=click.Path(exists=True, dir_okay=False), help='YAML list of the words y_i the polynomial is written in')
@click.option('--json', 'as_json', is_flag=True, default=False, help='Print the polynomials as JSON')
@handle_errors
def alexander(spec: str, basis_file: str | None, as_json: bool) -> None:
    """Print the Alexander polynomials of the arrangement SPEC"""
    arrangement = parse_spec(spec)
    basis = read_basis(basis_file, arrangement.n - 1)
    poly = alexander_poly(arrangement, basis)
    link = link_alexander_poly(arrangement)
    single = single_var_poly(arrangement)
    if as_json:
        echo_json({'spec': arrangement.text(), 'alexander_poly': poly.to_json(), 'terms': len(poly),
                   'link_alexander_poly': link.to_json(), 'single_var_poly': single.to_json()})
        return
    click.echo(f'Delta_A ({len(poly)} terms): {poly}')
    click.echo(f'Delta_L: {link}')
    click.echo(f'Delta_A(t): {single}')


def table1_row(row: dict) -> tuple[list, set[int]]:
    """Return the computed cells of a row of the invariants table and the
    indices of the cells that differ from the expected values"""
    spec = parse_spec(row['spec'])
    n = spec.n
    perm = horizontal_perm(spec)
    depth = arrangement_depth(perm) if perm is not None else None
    try:
        sigma = sigma_lists(depth2_normal_form(perm)).format() if perm is not None else None
    except ArrangementError:
        sigma = None
    if sigma is None:
        contained = tors_count(spec, 2, n - 2).count if n >= 3 else 0
        sigma_cell = f'verified-containment-only (Tors_2,{n - 2}={contained})'
    else:
        sigma_cell = sigma
    tors2 = tors_count(spec, 2, 1).count
    tors3 = tors_count(spec, 3, 1).count

    mismatches = set()
    expected_depth = None if row['depth'] == '-' else row['depth']
    if perm is not None and depth != expected_depth:
        mismatches.add(2)
    if sigma is not None and sigma != str(row['sigma']):
        mismatches.add(3)
    if tors2 != row['tors2']:
        mismatches.add(4)
    if tors3 != row['tors3']:
        mismatches.add(5)
    depth_cell = depth if depth is not None else '-'
    return [spec.text(), n, depth_cell, sigma_cell, tors2, tors3], mismatches


@cli.command()
@click.option('--check', is_flag=True, default=False, help='Exit with code 1 if a value differs from the expected table')
@click.option('--threads', default=env.THREADS, type=int, show_default=True, help='Number of threads evaluating torsion grids')
@handle_errors
def table1(check: bool, threads: int) -> None:
    """Compute the invariants of the arrangements of at most six planes"""
    prepare_environment(threads)
    rows, mismatches = [], set()
    for i, expected in enumerate(env.TABLE1):
        view.print_step(f'Computing {expected["spec"]}')
        row, wrong = table1_row(expected)
        rows.append(row)
        mismatches |= {(i, j) for j in wrong}
    view.display_table(['spec', 'n', 'depth', 'Sigma_(n-2)', 'Tors_2,1', 'Tors_3,1'], rows, mismatches)
    if check:
        if mismatches:
            view.print_error(f'{len(mismatches)} values differ from the expected table')
            raise SystemExit(1)
        click.echo('All values match the expected table')


@cli.command()
@click.argument('spec')
@click.argument('settings', nargs=-1)
@click.option('--p', 'primes', default=','.join(map(str, env.DEFAULT_PRIMES)), show_default=True, help='Comma separated primes p for the torsion counts Tors_(p,k)')
@click.option('--k', 'ideals', default=','.join(env.DEFAULT_IDEALS), show_default=True, help='Comma separated ideal indices k, only k=1 is available for cables')
@click.option('--json', 'as_json', is_flag=True, default=False, help='Print the report as JSON')
@click.option('--threads', default=env.THREADS, type=int, show_default=True, help='Number of threads evaluating torsion grids')
@handle_errors
def cable(spec: str, settings: tuple[str, ...], primes: str, ideals: str, as_json: bool, threads: int) -> None:
    """Compute the invariants of the cable of SPEC described by SETTINGS, any of
    k=<component> sign=+|- r=<count>. The last plane is cabled by default"""
    prepare_environment(threads)
    options = ''.join(f',{setting.strip()}' for setting in settings)
    arrangement = parse_spec(f'cable({spec}{options})')
    report = build_report(arrangement, parse_int_list(primes), ideals.split(','))
    if as_json:
        echo_json(report.to_json())
    else:
        view.display_report(report)


@cli.command('normal-form')
@click.argument('perm')
@handle_errors
def normal_form(perm: str) -> None:
    """Print the depth two normal form of the horizontal arrangement A(PERM)"""
    nf = depth2_normal_form(parse_perm(perm))
    lists = sigma_lists(nf)
    click.echo(nf.format())
    click.echo(f'Permutation: {format_perm(nf.permutation)}')
    click.echo(f'Depth: {nf.depth}')
    click.echo(f'Sigma_1: {",".join(map(str, lists.sigma1))}')
    click.echo(f'Sigma: {lists.format()}')


@cli.command('count-classes')
@click.argument('n', type=int)
@click.option('--enumerate', 'enumerate_', is_flag=True, default=False, help='Also count the normal forms one by one')
@handle_errors
def count_classes(n: int, enumerate_: bool) -> None:
    """Print the number of homotopy types of arrangements of N planes of depth at most two"""
    count = count_d2_classes(n)
    click.echo(count)
    if enumerate_:
        forms = enumerate_normal_forms(n)
        click.echo(f'Enumerated normal forms: {len(forms)}')
        if len(forms) != count:
            raise SystemExit(1)


def default_basis(arrangement: ArrangementSpec) -> tuple[FreeWord, ...] | None:
    if isinstance(arrangement, Catalog):
        return catalog_basis(arrangement.name)
    return None


@cli.command()
@click.argument('spec')
@click.argument('torus')
@click.option('--k', 'ideal', default='n-2', show_default=True, help='Ideal index k, an integer or relative to n')
@click.option('--basis', 'basis_file', default=None, type=click.Path(exists=True, dir_okay=False), help='YAML list of the words y_i the torus is written in, instead of the catalog basis')
@click.option('--x-basis', is_flag=True, default=False, help='Read the torus in the meridian coordinates even if the catalog registers a basis')
@handle_errors
def verify(spec: str, torus: str, ideal: str, basis_file: str | None, x_basis: bool) -> None:
    """Check that the subtorus TORUS, like 't6=1 & t4=-1', lies in V_k of SPEC"""
    arrangement = parse_spec(spec)
    n = arrangement.n
    basis = read_basis(basis_file, n - 1) if basis_file else (None if x_basis else default_basis(arrangement))
    subtorus = Subtorus.parse(torus, n)
    results = minor_check(arrangement, subtorus, parse_ideal(ideal, n), basis)
    click.echo(f'{sum(results)}/{len(results)} minors vanish on {subtorus}')
    contained = all(results)
    click.echo('true' if contained else 'false')
    if not contained:
        raise SystemExit(1)


@cli.command()
@click.argument('spec')
@click.option('--p', 'primes', default=','.join(map(str, env.DEFAULT_PRIMES)), show_default=True, help='Comma separated primes p for the torsion point counts')
@handle_errors
def components(spec: str, primes: str) -> None:
    """Print the components of V_(n-2) of the depth two arrangement SPEC, in the
    basis adapted to its normal form, with their verification"""
    arrangement = parse_spec(spec)
    perm = horizontal_perm(arrangement)
    if perm is None:
        raise click.UsageError(f'{arrangement} is not a horizontal arrangement')
    nf = depth2_normal_form(perm)
    n = nf.n
    target = Horizontal(nf.permutation)
    basis = normal_form_basis(nf)
    tori = bottom_components_d2(nf)
    click.echo(f'{nf.format()}, basis {", ".join(word.format() for word in basis)}')
    view.display_components([(torus.format(), torus.codimension, verify_subtorus(target, torus, n - 2, basis))
                             for torus in tori])
    for p in parse_int_list(primes):
        click.echo(f'Tors_({p},{n - 2}) on the components: {count_union_points(tori, p)}')


if __name__ == '__main__':
    try:
        cli()
    except KeyboardInterrupt:
        print("Pressed Ctrl-C to kill program.")
