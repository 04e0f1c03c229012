"""
Main Application
Command-line front end for Coxeter groups, Renner-Coxeter monoids and their adherence orders
"""

import argparse
import json
import logging
import os
import sys
from typing import Dict, List, Optional, Sequence

import config
from adherence import MINUS, PLUS, cover_pairs, leq, order_matrix, to_dot, vanilla_form, witness
from coxeter import CoxeterElement, CoxeterGroup, group_from_name, load_group
from greens import (
    RELATIONS,
    SUBMONOIDS,
    CounterexampleError,
    class_of,
    classes,
    extremum,
    special_submonoid,
    verify_counterexample,
)
from renner import (
    RennerElement,
    RennerSystem,
    partial_injection_count,
    rank_of,
    resolve_system,
    rook_system,
)
from verification import SUITES, PropertyViolation, Verifier

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


class RennerToolkit:
    """Builds systems from descriptors and answers the subcommand queries"""

    def __init__(self, budget: Optional[int] = None, opposite: bool = False, output_format: str = 'text'):
        """
        Initialize toolkit

        Args:
            budget: Element budget for every group and monoid built (default: from config)
            opposite: Work over the opposite cross-sectional lattice
            output_format: 'text', 'json' or 'dot'
        """
        self.budget = config.element_budget(budget)
        self.opposite = opposite
        self.output_format = output_format

    # Building

    def group(self, descriptor: str) -> CoxeterGroup:
        """A type name such as A3, B2, I2(5), A1xA1, or a Coxeter matrix file"""
        if os.path.isfile(descriptor):
            return load_group(descriptor, budget=self.budget)
        return group_from_name(descriptor, budget=self.budget)

    def system(self, descriptor: str) -> RennerSystem:
        """The base system named by a descriptor (rook:N[:orientation] or a system file)"""
        return resolve_system(descriptor, budget=self.budget)

    def working(self, system: RennerSystem) -> RennerSystem:
        return system.opposite() if self.opposite else system

    @staticmethod
    def show(system: RennerSystem, r: RennerElement) -> str:
        """Literal of r in the base system, so output always re-parses there"""
        return system.format(system.coerce(r))

    @staticmethod
    def show_unit(w: CoxeterElement) -> str:
        return w.group.format(w)

    def emit(self, payload: Dict, text: str):
        if self.output_format == 'json':
            print(json.dumps(payload, indent=2))
        else:
            print(text)

    # Subcommands

    def cmd_group(self, descriptor: str, list_elements: bool = False) -> int:
        group = self.group(descriptor)
        w0 = group.longest_element()
        payload = {
            'name': group.name,
            'rank': group.rank,
            'order': group.order(),
            'longest': self.show_unit(w0),
            'longest_word': list(w0.reduced_word()),
        }
        lines = [
            f'group:   {group.name}',
            f'rank:    {group.rank}',
            f'order:   {group.order()}',
            f'longest: {self.show_unit(w0)} (length {w0.length()})',
        ]
        if list_elements:
            payload['elements'] = [
                {'element': self.show_unit(w), 'length': w.length(), 'word': list(w.reduced_word())}
                for w in group.enumerate()
            ]
            lines += [
                f'  {self.show_unit(w)}  length {w.length()}  word {" ".join(map(str, w.reduced_word())) or "-"}'
                for w in group.enumerate()
            ]
        self.emit(payload, '\n'.join(lines))
        return EXIT_OK

    def cmd_rook(self, n: int, orientation: Optional[str] = None) -> int:
        base = rook_system(n, orientation=orientation, budget=self.budget)
        system = self.working(base)
        elements = system.enumerate_monoid()
        by_rank: Dict[int, int] = {}
        for r in elements:
            by_rank[rank_of(r)] = by_rank.get(rank_of(r), 0) + 1

        idempotents = []
        for e in system.lattice.idems:
            idempotents.append({
                'label': e,
                'element': self.show(base, system.idempotent(e)),
                'lambda': str(system.lam(e)),
                'lambda_upper': str(system.lam_star(e)),
                'lambda_lower': str(system.lam_substar(e)),
            })
        payload = {
            'system': system.name,
            'elements': len(elements),
            'formula': partial_injection_count(n),
            'by_rank': {str(k): v for k, v in sorted(by_rank.items())},
            'idempotents': idempotents,
        }
        lines = [
            f'system:   {system.name}',
            f'elements: {len(elements)} (sum of C(n,k)^2 k! = {partial_injection_count(n)})',
            'by rank:  ' + ', '.join(f'{k}: {v}' for k, v in sorted(by_rank.items())),
            'idempotent  element  lambda  lambda^*  lambda_*',
        ]
        lines += [
            f"{item['label']:<10}  {item['element']:<7}  {item['lambda']:<6}  "
            f"{item['lambda_upper']:<8}  {item['lambda_lower']}"
            for item in idempotents
        ]
        self.emit(payload, '\n'.join(lines))
        return EXIT_OK

    def cmd_order(self, descriptor: str, first: str, second: str, epsilon: str = PLUS,
                  show_witness: bool = False) -> int:
        base = self.system(descriptor)
        system = self.working(base)
        r, s = base.parse_element(first), base.parse_element(second)
        w = witness(r, s, epsilon, system)
        payload = {'r': self.show(base, r), 's': self.show(base, s), 'epsilon': epsilon, 'leq': w is not None}
        lines = ['true' if w is not None else 'false']
        if show_witness:
            payload['witness'] = self.show_unit(w) if w is not None else None
            lines.append(f'witness: {self.show_unit(w) if w is not None else "none"}')
        self.emit(payload, '\n'.join(lines))
        return EXIT_OK

    def cmd_forms(self, descriptor: str, literal: str) -> int:
        base = self.system(descriptor)
        system = self.working(base)
        r = system.coerce(base.parse_element(literal))
        u = self.show_unit

        left = system.left_standard_form(r)
        right = system.right_standard_form(r)
        hybrid = system.hybrid_standard_form(r)
        form = vanilla_form(r, system)
        if system.contains_unit_idem:
            rebuilt = (system.unit(form.sigma_minus) * form.opposite.idempotent(form.e_minus)
                       * system.unit(form.sigma_zero) * system.idempotent(form.e_plus)
                       * system.unit(form.sigma_plus))
        else:
            rebuilt = form.assemble()
        ok = rebuilt == r

        payload = {
            'element': self.show(base, r),
            'system': system.name,
            'left': {'x': u(left.x), 'e': left.e, 'y': u(left.y)},
            'right': {'y': u(right.y), 'e': right.e, 'x': u(right.x)},
            'hybrid': {'x': u(hybrid.x), 'e': hybrid.e, 'y': u(hybrid.y), 'z': u(hybrid.z)},
            'vanilla': {
                'sigma_minus': u(form.sigma_minus),
                'e_minus': form.e_minus,
                'sigma_zero': u(form.sigma_zero),
                'e_plus': form.e_plus,
                'sigma_plus': u(form.sigma_plus),
            },
            'ok': ok,
        }
        text = '\n'.join([
            f'element: {self.show(base, r)} in {system.name}',
            f'left:    x={u(left.x)} e={left.e} y={u(left.y)}',
            f'right:   y={u(right.y)} e={right.e} x={u(right.x)}',
            f'hybrid:  x={u(hybrid.x)} e={hybrid.e} y={u(hybrid.y)} z={u(hybrid.z)}',
            f'vanilla: s-={u(form.sigma_minus)} e-={form.e_minus} s0={u(form.sigma_zero)} '
            f'e+={form.e_plus} s+={u(form.sigma_plus)}',
            f"check:   {'ok' if ok else 'MISMATCH'}",
        ])
        self.emit(payload, text)
        return EXIT_OK if ok else EXIT_FAILURE

    def cmd_extrema(self, descriptor: str, literal: str, relations: Sequence[str], epsilon: str = PLUS) -> int:
        base = self.system(descriptor)
        system = self.working(base)
        r = base.parse_element(literal)
        entries = []
        for relation in relations:
            entries.append({
                'relation': relation,
                'epsilon': epsilon,
                'size': len(class_of(system.coerce(r), relation)),
                'min': self.show(base, extremum(r, relation, epsilon, 'min', system)),
                'max': self.show(base, extremum(r, relation, epsilon, 'max', system)),
            })
        lines = []
        for entry in entries:
            lines += [
                f"{entry['relation']}-class of {self.show(base, r)} ({epsilon}): {entry['size']} elements",
                f"  min: {entry['min']}",
                f"  max: {entry['max']}",
            ]
        self.emit({'element': self.show(base, r), 'classes': entries}, '\n'.join(lines))
        return EXIT_OK

    def cmd_classes(self, descriptor: str, relation: str, epsilon: str = PLUS) -> int:
        base = self.system(descriptor)
        system = self.working(base)
        entries = []
        for members in classes(system, relation):
            entries.append({
                'min': self.show(base, extremum(members[0], relation, epsilon, 'min', system)),
                'max': self.show(base, extremum(members[0], relation, epsilon, 'max', system)),
                'members': [self.show(base, m) for m in members],
            })
        lines = [f'{len(entries)} {relation}-classes in {system.name} ({epsilon})']
        for i, entry in enumerate(entries):
            lines.append(f"[{i}] size {len(entry['members'])}  min {entry['min']}  max {entry['max']}")
            lines.append('    ' + '  '.join(entry['members']))
        payload = {'system': system.name, 'relation': relation, 'epsilon': epsilon, 'classes': entries}
        self.emit(payload, '\n'.join(lines))
        return EXIT_OK

    def cmd_hasse(self, descriptor: str, epsilon: str = PLUS, member: Optional[str] = None,
                  relation: str = 'J', submonoid: Optional[str] = None) -> int:
        base = self.system(descriptor)
        system = self.working(base)
        if member is not None:
            elements = class_of(system.coerce(base.parse_element(member)), relation)
            name = f'{system.name} {relation}-class <={epsilon}'
        elif submonoid is not None:
            elements = special_submonoid(system, submonoid, epsilon)
            name = f'{system.name} {submonoid}{epsilon} <={epsilon}'
        else:
            elements = system.enumerate_monoid()
            name = f'{system.name} <={epsilon}'

        matrix = order_matrix(elements, lambda a, b: leq(a, b, epsilon, system))
        labels = [self.show(base, r) for r in elements]
        if self.output_format == 'text':
            pairs = cover_pairs(elements, matrix)
            print('\n'.join(f'{self.show(base, a)} < {self.show(base, b)}' for a, b in pairs))
        elif self.output_format == 'json':
            pairs = cover_pairs(elements, matrix)
            print(json.dumps({
                'name': name,
                'nodes': labels,
                'covers': [[self.show(base, a), self.show(base, b)] for a, b in pairs],
            }, indent=2))
        else:
            sys.stdout.write(to_dot(elements, matrix, name=name, labels=labels))
        return EXIT_OK

    def cmd_verify(self, descriptor: str, suites: Optional[List[str]] = None,
                   workers: Optional[int] = None) -> int:
        system = self.working(self.system(descriptor))
        report = Verifier(system, workers=workers).run(suites)
        self.emit(report.to_dict(), report.summary())
        try:
            report.raise_for_failure()
        except PropertyViolation as exc:
            print(f'first failure: {exc}', file=sys.stderr)
            return EXIT_FAILURE
        return EXIT_OK

    def cmd_counterexample(self, descriptor: str = 'rook:3', epsilon: str = PLUS, strict: bool = False) -> int:
        system = self.working(self.system(descriptor))
        report = verify_counterexample(system, epsilon, strict=strict)
        self.emit(report.to_dict(), report.summary())
        if epsilon == PLUS and not report.passed:
            return EXIT_FAILURE
        return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        '--budget',
        type=int,
        default=None,
        help=f'Largest number of elements any enumeration may produce '
             f'(default: ${config.BUDGET_ENV_VAR} or {config.DEFAULT_ELEMENT_BUDGET})'
    )
    common.add_argument(
        '--format',
        choices=('text', 'json', 'dot'),
        default=None,
        help='Output format (default: text, dot for hasse)'
    )
    common.add_argument(
        '--opposite',
        action='store_true',
        help='Work over the opposite cross-sectional lattice w0 Lambda w0'
    )
    common.add_argument(
        '-v', '--verbose',
        action='store_true',
        help='Log debug records to stderr'
    )

    order = argparse.ArgumentParser(add_help=False)
    direction = order.add_mutually_exclusive_group()
    direction.add_argument('--plus', dest='epsilon', action='store_const', const=PLUS,
                           help='Use the + adherence order (default)')
    direction.add_argument('--minus', dest='epsilon', action='store_const', const=MINUS,
                           help='Use the - adherence order')
    order.set_defaults(epsilon=PLUS)

    parser = argparse.ArgumentParser(
        description='Coxeter groups, Renner-Coxeter monoids, adherence orders and Green class extrema'
    )
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('group', parents=[common], help='Summarize a finite Coxeter group')
    p.add_argument('group', help='Type name (A3, B2, I2(5), A1xA1) or Coxeter matrix file')
    p.add_argument('--elements', action='store_true', help='List every element with its length')

    p = sub.add_parser('rook', parents=[common], help='Summarize the rook monoid R_n and its type maps')
    p.add_argument('n', type=int, help='Matrix size')
    p.add_argument(
        '--orientation',
        choices=config.ROOK_ORIENTATIONS,
        default=None,
        help=f'Diagonal placement of the partial identities (default: {config.ROOK_IDEMPOTENT_ORIENTATION})'
    )

    p = sub.add_parser('order', parents=[common, order], help='Decide r <= s')
    p.add_argument('system', help='rook:N[:orientation] or a system file')
    p.add_argument('r', help='Lower element literal')
    p.add_argument('s', help='Upper element literal')
    p.add_argument('--witness', action='store_true', help='Also print the witness w')

    p = sub.add_parser('forms', parents=[common], help='Left, right, hybrid and vanilla forms of an element')
    p.add_argument('system', help='rook:N[:orientation] or a system file')
    p.add_argument('r', help='Element literal')

    p = sub.add_parser('extrema', parents=[common, order], help='Class minima and maxima of an element')
    p.add_argument('system', help='rook:N[:orientation] or a system file')
    p.add_argument('r', help='Element literal')
    p.add_argument('--relation', choices=RELATIONS, default=None, help='Green relation (default: all four)')

    p = sub.add_parser('classes', parents=[common, order], help='Partition into Green classes with extrema')
    p.add_argument('system', help='rook:N[:orientation] or a system file')
    p.add_argument('--relation', choices=RELATIONS, default='J', help='Green relation (default: J)')

    p = sub.add_parser('hasse', parents=[common, order], help='Covering relation of the order as DOT')
    p.add_argument('system', help='rook:N[:orientation] or a system file')
    subset = p.add_mutually_exclusive_group()
    subset.add_argument('--class', dest='member', default=None, help='Restrict to the class of this element')
    subset.add_argument('--submonoid', choices=tuple(SUBMONOIDS), default=None, help='Restrict to a submonoid')
    p.add_argument('--relation', choices=RELATIONS, default='J', help='Relation for --class (default: J)')

    p = sub.add_parser('verify', parents=[common], help='Run the exhaustive property suites')
    p.add_argument('system', help='rook:N[:orientation] or a system file')
    p.add_argument('--suite', action='append', choices=SUITES, default=None,
                   help='Suite to run, repeatable (default: all)')
    p.add_argument('--workers', type=int, default=config.DEFAULT_WORKERS,
                   help=f'Thread fan-out (default: {config.DEFAULT_WORKERS})')

    p = sub.add_parser('counterexample', parents=[common, order],
                       help='Check the 3x3 rook pair whose H-class minima break monotonicity')
    p.add_argument('system', nargs='?', default='rook:3', help='Rook monoid of size 3 (default: rook:3)')
    p.add_argument('--strict', action='store_true', help='Raise on the first failing claim')

    return parser


def run(args: argparse.Namespace) -> int:
    output_format = args.format or ('dot' if args.command == 'hasse' else 'text')
    toolkit = RennerToolkit(budget=args.budget, opposite=args.opposite, output_format=output_format)
    command = args.command
    if command == 'group':
        return toolkit.cmd_group(args.group, args.elements)
    if command == 'rook':
        return toolkit.cmd_rook(args.n, args.orientation)
    if command == 'order':
        return toolkit.cmd_order(args.system, args.r, args.s, args.epsilon, args.witness)
    if command == 'forms':
        return toolkit.cmd_forms(args.system, args.r)
    if command == 'extrema':
        relations = [args.relation] if args.relation else list(RELATIONS)
        return toolkit.cmd_extrema(args.system, args.r, relations, args.epsilon)
    if command == 'classes':
        return toolkit.cmd_classes(args.system, args.relation, args.epsilon)
    if command == 'hasse':
        return toolkit.cmd_hasse(args.system, args.epsilon, args.member, args.relation, args.submonoid)
    if command == 'verify':
        return toolkit.cmd_verify(args.system, args.suite, args.workers)
    return toolkit.cmd_counterexample(args.system, args.epsilon, args.strict)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point"""
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format='%(levelname)s %(name)s: %(message)s',
    )
    try:
        return run(args)
    except (CounterexampleError, PropertyViolation) as exc:
        print(f'error: {exc}', file=sys.stderr)
        return EXIT_FAILURE
    except ValueError as exc:
        print(f'error: {exc}', file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
