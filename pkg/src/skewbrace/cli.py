"""Command-line front end.

Exit status: 0 on success or a positive answer, 1 when well-formed input
gets a negative mathematical answer, 2 on usage or format errors.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import formats
from .braces import solution_from_brace, verify
from .bwords import print_bword
from .enumeration import MAX_ORDER, MAX_SOLUTION_SIZE, enumerate_skew_braces, enumerate_solutions
from .errors import FormatError, PreconditionError
from .ideals import (
    all_ideals,
    annihilator,
    conjugates,
    derived_ideal,
    is_annihilator_nilpotent,
    is_ideal,
    is_simple,
    socle,
    upper_annihilator_series,
    upper_socle_series,
)
from .presentations import extend_presentation, table_presentation, trivial_brace_presentation
from .solutions import extract_diagonal, is_involutive, is_nondegenerate, ybe_witness
from .structure import emit_add_presentation, emit_mul_presentation, permutation_brace

OK, NEGATIVE, USAGE = 0, 1, 2


@dataclass
class CommandResult:
    status: int
    report: str
    files: dict = field(default_factory=dict)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f'{self.format_usage()}{self.prog}: error: {message}\n')


@dataclass
class _Out:
    """What a subcommand produced before rendering."""

    status: int = OK
    lines: list = field(default_factory=list)
    witnesses: list = field(default_factory=list)
    counts: dict = field(default_factory=dict)
    data: dict = field(default_factory=dict)
    files: dict = field(default_factory=dict)

    def say(self, line=''):
        self.lines.append(line)


def _yes(flag):
    return 'yes' if flag else 'no'


def _set(s):
    return '{' + ', '.join(map(str, sorted(s))) + '}'


def _read(path):
    try:
        return Path(path).read_text()
    except OSError as e:
        raise FormatError(f'cannot read {path}: {e.strerror}') from None


def _load(path, parser):
    try:
        return parser(_read(path))
    except FormatError as e:
        raise FormatError(f'{path}: {e}') from None


def _int_list(text, what):
    try:
        return [int(t) for t in text.split(',') if t.strip()]
    except ValueError:
        raise _UsageError(f'{what} must be a comma-separated list of integers\n') from None


def _element(b, e):
    if not 0 <= e < b.n:
        raise _UsageError(f'element {e} out of range 0..{b.n - 1}\n')
    return e


def _emit(out, text, dest):
    if dest:
        out.files[dest] = text
        out.say(f'wrote {dest}')
    else:
        out.lines.extend(text.rstrip('\n').split('\n'))


def _require_brace(out, b):
    report = verify(b)
    if report.ok:
        return True
    out.status = NEGATIVE
    out.say('not a skew brace')
    for v in report.violations:
        out.say(f'  {v}')
        out.witnesses.append({'axiom': v.axiom, 'witness': list(v.witness), 'detail': v.detail})
    return False


# subcommands ----------------------------------------------------------------

def cmd_verify_solution(args, out):
    sol = _load(args.file, formats.parse_solution)
    w = ybe_witness(sol)
    nd, inv = is_nondegenerate(sol), is_involutive(sol)
    out.say(f'YBE: {_yes(w is None)}; non-degenerate: {_yes(nd)}; involutive: {_yes(inv)}')
    out.data.update(ybe=w is None, nondegenerate=nd, involutive=inv)
    out.counts['size'] = sol.n
    if w is not None:
        t, lhs, rhs = w
        out.status = NEGATIVE
        out.say(f'witness: triple {t}: r12 r23 r12 gives {lhs}, r23 r12 r23 gives {rhs}')
        out.witnesses.append({'triple': list(t), 'lhs': list(lhs), 'rhs': list(rhs)})


def cmd_verify_brace(args, out):
    b = _load(args.file, formats.parse_brace)
    out.counts['order'] = b.n
    if _require_brace(out, b):
        out.say('skew brace: all axioms hold')
    out.counts['violations'] = len(out.witnesses)


def cmd_brace_to_solution(args, out):
    b = _load(args.file, formats.parse_brace)
    if _require_brace(out, b):
        _emit(out, formats.dump_solution(solution_from_brace(b)), args.out)


def cmd_solution_diagonal(args, out):
    sol = _load(args.file, formats.parse_solution)
    d = extract_diagonal(sol)
    for x in range(sol.n):
        out.say(f'sigma_{x}: ' + ' '.join(str(int(v)) for v in d.sigma[x]))
    for y in range(sol.n):
        out.say(f'tau_{y}: ' + ' '.join(str(int(v)) for v in d.tau[y]))
    out.data.update(sigma=d.sigma.tolist(), tau=d.tau.tolist())


def cmd_perm_brace(args, out):
    sol = _load(args.solution, formats.parse_solution)
    try:
        pb = permutation_brace(sol)
    except PreconditionError as e:
        out.status = NEGATIVE
        out.say(f'no permutation skew brace: {e}')
        return
    out.counts['order'] = pb.brace.n
    out.data['generator_map'] = list(pb.generator_map)
    if args.out:
        out.say(f'permutation skew brace of order {pb.brace.n}')
    _emit(out, formats.dump_perm_brace(pb), args.out)


def cmd_present_structure(args, out):
    sol = _load(args.solution, formats.parse_solution)
    if not is_nondegenerate(sol):
        out.status = NEGATIVE
        out.say('solution is degenerate')
        return
    p = emit_mul_presentation(sol) if args.mul else emit_add_presentation(sol)
    out.counts['relators'] = len(p)
    _emit(out, formats.dump_presentation(p), args.out)


def cmd_present_table(args, out):
    b = _load(args.file, formats.parse_brace)
    if _require_brace(out, b):
        p, _ = table_presentation(b)
        out.counts['relators'] = len(p)
        _emit(out, formats.dump_presentation(p), args.out)


def cmd_present_trivial(args, out):
    orders = _int_list(args.orders, '--orders')
    if not orders or any(k < 0 for k in orders):
        raise _UsageError('--orders needs at least one integer >= 0\n')
    p = trivial_brace_presentation(orders)
    out.counts['relators'] = len(p)
    _emit(out, formats.dump_presentation(p), args.out)


def cmd_extend_presentation(args, out):
    b = _load(args.file, formats.parse_brace)
    if not _require_brace(out, b):
        return
    ideal = {_element(b, e) for e in _int_list(args.ideal, '--ideal')} | {0}
    if not is_ideal(b, ideal):
        out.status = NEGATIVE
        out.say(f'{_set(ideal)} is not an ideal')
        return
    p, assignment = extend_presentation(b, ideal)
    out.counts['relators'] = len(p)
    out.data['assignment'] = assignment
    if args.out:
        out.say('assignment: ' + ','.join(f'{g}={e}' for g, e in assignment.items()))
    _emit(out, formats.dump_presentation(p), args.out)


def cmd_check_presentation(args, out):
    p = _load(args.file, formats.parse_presentation)
    b = _load(args.brace, formats.parse_brace)
    if not _require_brace(out, b):
        return
    assignment = {}
    for item in (args.assign or '').split(','):
        if not item.strip():
            continue
        name, sep, value = item.partition('=')
        if not sep:
            raise _UsageError(f'bad assignment {item!r}, expected name=element\n')
        try:
            assignment[name.strip()] = _element(b, int(value))
        except ValueError:
            raise _UsageError(f'bad element in assignment {item!r}\n') from None
    missing = [g for g in p.generators if g not in assignment]
    if missing:
        raise _UsageError(f'no value assigned to generator {missing[0]!r}\n')
    values = p.evaluate(b, assignment)
    bad = [(k, v) for k, v in enumerate(values) if v != 0]
    out.counts.update(relators=len(values), failed=len(bad))
    if not bad:
        out.say(f'all {len(values)} relators evaluate to 0')
        return
    out.status = NEGATIVE
    for k, v in bad:
        out.say(f'relator {k + 1} evaluates to {v}: {print_bword(p.relators[k])}')
        out.witnesses.append({'relator': k + 1, 'value': v})


def cmd_invariants(args, out):
    b = _load(args.file, formats.parse_brace)
    if not _require_brace(out, b):
        return
    soc, ann, der = socle(b), annihilator(b), derived_ideal(b)
    asr, ssr = upper_annihilator_series(b), upper_socle_series(b)
    out.say(f'order: {b.n}')
    out.say(f'socle: {soc}')
    out.say(f'annihilator: {ann}')
    out.say(f'B(2): {der}')
    out.say('upper annihilator series: ' + ' < '.join(str(t) for t in asr))
    out.say('upper socle series: ' + ' < '.join(str(t) for t in ssr))
    nil = is_annihilator_nilpotent(b)
    out.say(f'annihilator nilpotent: {_yes(nil)}')
    out.data.update(socle=soc.sorted(), annihilator=ann.sorted(), derived=der.sorted(),
                    upper_annihilator_series=[t.sorted() for t in asr],
                    upper_socle_series=[t.sorted() for t in ssr],
                    annihilator_nilpotent=nil)
    out.counts['order'] = b.n
    if b.n <= 12:
        ideals = all_ideals(b)
        simple = is_simple(b)
        out.say(f'simple: {_yes(simple)}')
        out.say('ideals: ' + ' '.join(str(i) for i in ideals))
        out.data.update(simple=simple, ideals=[i.sorted() for i in ideals])
        out.counts['ideals'] = len(ideals)


def cmd_conjugates(args, out):
    b = _load(args.file, formats.parse_brace)
    if not _require_brace(out, b):
        return
    x = _element(b, args.element)
    c = conjugates(b, x)
    out.say(f'conjugates of {x}: {c}')
    out.say(f'count: {len(c)}')
    out.counts['conjugates'] = len(c)
    out.data['conjugates'] = c.sorted()


def cmd_enumerate_braces(args, out):
    hi = MAX_ORDER if args.method == 'holomorph' else 4
    if not 1 <= args.order <= hi:
        raise _UsageError(f'--order must be between 1 and {hi} for method {args.method}\n')
    cat = enumerate_skew_braces(args.order, args.method)
    out.counts['braces'] = len(cat)
    _emit(out, formats.dump_catalog(cat), args.out)


def cmd_enumerate_solutions(args, out):
    if not 1 <= args.size <= MAX_SOLUTION_SIZE:
        raise _UsageError(f'--size must be between 1 and {MAX_SOLUTION_SIZE}\n')
    sols = enumerate_solutions(args.size, args.nondegenerate, args.involutive)
    out.counts['solutions'] = len(sols)
    text = f'solutions {args.size} {len(sols)}\n' + formats.dump_solution_list(sols)
    _emit(out, text, args.out)


# parser ---------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true', help='machine-readable report')
    p = _Parser(prog='skewbrace', description='Finite skew braces and Yang-Baxter solutions.')
    sub = p.add_subparsers(dest='command', required=True, parser_class=_Parser)

    def add(name, func, help):
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(func=func)
        return sp

    sp = add('verify-solution', cmd_verify_solution, 'check YBE, non-degeneracy, involutivity')
    sp.add_argument('file')
    sp = add('verify-brace', cmd_verify_brace, 'check the skew brace axioms')
    sp.add_argument('file')
    sp = add('brace-to-solution', cmd_brace_to_solution, 'the solution r_B of a skew brace')
    sp.add_argument('file')
    sp.add_argument('--out')
    sp = add('solution-diagonal', cmd_solution_diagonal, 'the maps sigma_x and tau_y')
    sp.add_argument('file')
    sp = add('perm-brace', cmd_perm_brace, 'permutation skew brace of a solution')
    sp.add_argument('solution')
    sp.add_argument('--out')
    sp = add('present-structure', cmd_present_structure,
             'presentation of the structure group (--mul) or additive group (--add)')
    sp.add_argument('solution')
    g = sp.add_mutually_exclusive_group(required=True)
    g.add_argument('--mul', action='store_true')
    g.add_argument('--add', action='store_true')
    sp.add_argument('--out')
    sp = add('present-table', cmd_present_table, 'presentation from the two tables')
    sp.add_argument('file')
    sp.add_argument('--out')
    sp = add('present-trivial', cmd_present_trivial,
             'presentation of a trivial brace on cyclic factors (0 = infinite)')
    sp.add_argument('--orders', required=True)
    sp.add_argument('--out')
    sp = add('extend-presentation', cmd_extend_presentation,
             'presentation built from an ideal and its quotient')
    sp.add_argument('file')
    sp.add_argument('--ideal', required=True)
    sp.add_argument('--out')
    sp = add('check-presentation', cmd_check_presentation,
             'evaluate every relator in a brace')
    sp.add_argument('file')
    sp.add_argument('--in', dest='brace', required=True)
    sp.add_argument('--assign', default='')
    sp = add('invariants', cmd_invariants, 'socle, annihilator, series, ideals')
    sp.add_argument('file')
    sp = add('conjugates', cmd_conjugates, 'all conjugates of an element')
    sp.add_argument('file')
    sp.add_argument('--element', type=int, required=True)
    sp = add('enumerate-braces', cmd_enumerate_braces, 'all skew braces of an order')
    sp.add_argument('--order', type=int, required=True)
    sp.add_argument('--method', choices=['naive', 'holomorph'], default='holomorph')
    sp.add_argument('--out')
    sp = add('enumerate-solutions', cmd_enumerate_solutions, 'all solutions of a size')
    sp.add_argument('--size', type=int, required=True)
    sp.add_argument('--nondegenerate', action='store_true')
    sp.add_argument('--involutive', action='store_true')
    sp.add_argument('--out')
    return p


def _render(out, as_json):
    if not as_json:
        return '\n'.join(out.lines) + '\n'
    doc = {'status': out.status, 'witnesses': out.witnesses, 'counts': out.counts,
           'report': out.lines}
    doc.update(out.data)
    return json.dumps(doc, indent=2, sort_keys=True) + '\n'


def run(argv):
    """Parse ``argv`` and run one subcommand; never raises for bad input."""
    parser = build_parser()
    buf = io.StringIO()
    try:
        with contextlib.redirect_stdout(buf):
            args = parser.parse_args(argv)
    except _UsageError as e:
        return CommandResult(USAGE, str(e))
    except SystemExit as e:  # --help
        return CommandResult(OK if not e.code else USAGE, buf.getvalue())
    out = _Out()
    try:
        args.func(args, out)
    except _UsageError as e:
        out = _Out(status=USAGE, lines=[str(e).rstrip('\n')])
    except FormatError as e:
        out = _Out(status=USAGE, lines=[f'format error: {e}'])
    for path, text in out.files.items():
        Path(path).write_text(text)
    return CommandResult(out.status, _render(out, getattr(args, 'json', False)), out.files)


def main(argv=None):
    res = run(sys.argv[1:] if argv is None else argv)
    stream = sys.stdout if res.status != USAGE else sys.stderr
    stream.write(res.report)
    return res.status


if __name__ == '__main__':
    sys.exit(main())
