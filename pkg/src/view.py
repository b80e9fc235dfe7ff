from __future__ import annotations

import sys
import textwrap
from typing import TYPE_CHECKING, Any, Sequence

from colorama import Fore

if TYPE_CHECKING:
    from src.report import Report


def print_step(message: str) -> None:
    """Display a banner announcing the next phase, on stderr"""
    print(f'{Fore.YELLOW}***{Fore.WHITE} {message} {Fore.YELLOW}***{Fore.WHITE}', file=sys.stderr)


def print_progress(done: int, total: int, label: str) -> None:
    """Display the number of [done] tasks out of [total] for the computation [label]"""
    print(f'\r{label}: {Fore.GREEN}{done}/{total}{Fore.WHITE}', end='\n' if done == total else '', file=sys.stderr)


def print_error(message: str) -> None:
    print(f'{Fore.RED}Error:{Fore.WHITE} {message}', file=sys.stderr)


def _value(value: Any) -> str:
    if isinstance(value, str) and value.startswith('unavailable'):
        return f'{Fore.YELLOW}{value}{Fore.WHITE}'
    return f'{Fore.GREEN}{value}{Fore.WHITE}'


def _wrapped(text: str, indent: int) -> str:
    return textwrap.fill(text, width=100, subsequent_indent=' ' * indent)


def display_report(report: Report) -> None:
    """Display the invariants gathered in [report]"""
    print(f'==== {report.spec} ====')
    print(f'   Planes: {_value(report.n)}')
    print(f'   Depth: {_value(report.depth)}')
    print(f'   Normal form: {_value(report.normal_form)}')
    print(f'   Sigma_(n-2): {_value(report.sigma)}')
    print(f'   Delta_A: {_wrapped(_value(report.alexander_poly), 12)}')
    print(f'   Delta_A(t): {_wrapped(_value(report.single_var_poly), 15)}')
    print(f'   delta: {_value(report.delta)}')
    for entry in report.tors:
        print(f'   Tors_({entry.p},{entry.k}): {_value(entry.count)}')
    if isinstance(report.components, list):
        print(f'\n   Components {Fore.GREEN}[{len(report.components)}]{Fore.WHITE}')
        for component in report.components:
            print(f'      {component}')


def display_components(rows: Sequence[tuple[str, int, bool]]) -> None:
    """Display (subtorus, codimension, contained) rows"""
    for torus, codimension, contained in rows:
        flag = f'{Fore.GREEN}contained' if contained else f'{Fore.RED}NOT contained'
        print(f'   [{codimension}] {torus}: {flag}{Fore.WHITE}')


def display_table(header: Sequence[str], rows: Sequence[Sequence[Any]], mismatches: set[tuple[int, int]]) -> None:
    """Display [rows] in aligned columns, the cells listed in [mismatches] in red"""
    cells = [[str(value) for value in row] for row in rows]
    widths = [max([len(title)] + [len(row[col]) for row in cells]) for col, title in enumerate(header)]
    print('  '.join(title.ljust(width) for title, width in zip(header, widths)))
    print('  '.join('-' * width for width in widths))
    for i, row in enumerate(cells):
        colored = []
        for j, (value, width) in enumerate(zip(row, widths)):
            color = Fore.RED if (i, j) in mismatches else Fore.WHITE
            colored.append(f'{color}{value.ljust(width)}{Fore.WHITE}')
        print('  '.join(colored).rstrip())
