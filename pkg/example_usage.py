"""
Example usage of individual modules
Demonstrates how to use each package separately
"""

from adherence import MINUS, PLUS, leq, order_matrix, to_dot, vanilla_form, witness
from coxeter import group_from_name, symmetric_group
from greens import classes, extremum, special_submonoid, verify_counterexample
from parabolic import GeneratorSubset, circ, project_right
from renner import from_vector, rook_system, to_matrix


def example_coxeter():
    """Example: Coxeter groups and parabolic projections"""
    print("=== Coxeter Group Example ===")

    group = symmetric_group(4)
    w0 = group.longest_element()
    print(f"{group.name}: {group.order()} elements, w0 = {group.format(w0)} of length {w0.length()}")

    # Split w0 against W_{1,2}
    subset = GeneratorSubset.of(group.rank, [1, 2])
    minimal, parabolic = project_right(w0, subset)
    print(f"w0 = {group.format(minimal)} * {group.format(parabolic)}")

    # The optimization operator on B2
    b2 = group_from_name('B2')
    s1, s2 = b2.generators
    print(f"B2: s1 o s2s1 = {b2.format(circ(s1, s2 * s1))}")


def example_rook():
    """Example: the rook monoid R_3 as partial permutation matrices"""
    print("=== Rook Monoid Example ===")

    system = rook_system(3)
    elements = system.enumerate_monoid()
    print(f"{system.name}: {len(elements)} elements")

    r = from_vector(system, (3, 2, 0))
    s = from_vector(system, (3, 2, 1))
    print(f"r = {r}, s = {s}, r*s = {r * s}, r* = {r.star()}")
    print(to_matrix(r))

    form = vanilla_form(r)
    print(f"vanilla form of r: {form}")


def example_order():
    """Example: adherence orders and their Hasse diagram"""
    print("=== Adherence Order Example ===")

    system = rook_system(2)
    r = from_vector(system, (0, 1))
    s = from_vector(system, (2, 1))
    for epsilon in (PLUS, MINUS):
        w = witness(r, s, epsilon)
        print(f"{r} <={epsilon} {s}: {w is not None} (witness {w})")

    elements = system.enumerate_monoid()
    matrix = order_matrix(elements, lambda a, b: leq(a, b, PLUS))
    print(to_dot(elements, matrix, name='R2'))


def example_extrema():
    """Example: Green class extrema and the special submonoids"""
    print("=== Class Extrema Example ===")

    system = rook_system(3)
    for relation in ('J', 'L', 'R', 'H'):
        count = len(classes(system, relation))
        print(f"{relation}: {count} classes")

    r = from_vector(system, (3, 2, 0))
    for relation in ('J', 'L', 'R', 'H'):
        low = extremum(r, relation, PLUS, 'min')
        high = extremum(r, relation, PLUS, 'max')
        print(f"{relation}-class of {r}: min {low}, max {high}")

    for name in ('GJ', 'JG', 'N', 'O'):
        print(f"{name}+: {len(special_submonoid(system, name, PLUS))} elements")


def example_counterexample():
    """Example: the 3x3 pair whose H-class minima break monotonicity"""
    print("=== Counterexample ===")

    report = verify_counterexample()
    print(report.summary())


if __name__ == "__main__":
    import sys

    modes = {
        'coxeter': example_coxeter,
        'rook': example_rook,
        'order': example_order,
        'extrema': example_extrema,
        'counterexample': example_counterexample,
    }
    if len(sys.argv) > 1 and sys.argv[1].lower() in modes:
        modes[sys.argv[1].lower()]()
    else:
        print("Usage: python example_usage.py [coxeter|rook|order|extrema|counterexample]")
        print("\nExamples:")
        print("  python example_usage.py coxeter         - Groups, projections and o")
        print("  python example_usage.py rook            - The rook monoid R_3")
        print("  python example_usage.py order           - Adherence orders on R_2 as DOT")
        print("  python example_usage.py extrema         - Class extrema and submonoids of R_3")
        print("  python example_usage.py counterexample  - The H-class minimum counterexample")
