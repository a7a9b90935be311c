import pytest

from middledom.errors import GraphError, NotApplicable
from middledom.families import (
    FORMULAS,
    FamilySpec,
    complete,
    complete_bipartite,
    cycle,
    double_star,
    formula_gamma_middle,
    friendship,
    generate,
    path,
    star,
    star_join_diagonal,
    wheel,
    wheel_order,
    wheel_rim_reading,
)
from middledom.solvers import gamma_middle_fast, gamma_middle_oracle
from middledom.transforms import corona_k1, corona_p2, join_empty, middle_graph

SIZES = [
    (path, lambda n: (n, n - 1), range(1, 13)),
    (cycle, lambda n: (n, n), range(3, 13)),
    (star, lambda n: (n + 1, n), range(1, 9)),
    (double_star, lambda n: (2 * n + 1, 2 * n), range(1, 9)),
    (wheel, lambda n: (n + 1, 2 * n), range(3, 11)),
    (complete, lambda n: (n, n * (n - 1) // 2), range(1, 13)),
    (friendship, lambda n: (2 * n + 1, 3 * n), range(1, 6)),
]


@pytest.mark.parametrize("gen, expect, ns", SIZES, ids=lambda x: getattr(x, "__name__", ""))
def test_order_and_size(gen, expect, ns):
    for n in ns:
        g = gen(n)
        assert (g.n, g.m) == expect(n)


def test_complete_bipartite_sizes():
    for a in range(1, 7):
        for b in range(1, 7):
            g = complete_bipartite(a, b)
            assert (g.n, g.m) == (a + b, a * b)


def test_generator_examples():
    assert (path(5).n, path(5).m) == (5, 4)
    f4 = friendship(4)
    assert (f4.n, f4.m) == (9, 12)
    assert f4.degree(0) == 8
    ds = double_star(4)
    assert ds.n == 9
    assert ds.neighbors(0) == (1, 2, 3, 4)
    assert all(ds.neighbors(4 + i) == (i,) for i in range(1, 5))
    w = wheel(5)
    assert w.degree(5) == 5
    assert wheel_order(6) == wheel(5)


@pytest.mark.parametrize("gen, n", [(cycle, 2), (path, 0), (star, 0), (wheel, 2), (wheel_order, 3), (friendship, 0)])
def test_invalid_parameters(gen, n):
    with pytest.raises(GraphError):
        gen(n)


def test_descriptor_parsing():
    assert FamilySpec.parse("kbip:2,3") == FamilySpec("kbip", (2, 3))
    assert str(FamilySpec.parse(" cycle : 6 ")) == "cycle:6"
    assert generate("star_join:3,2") == join_empty(star(3), 2)
    for bad in ("cycle", "cycle:", "hypercube:3", "kbip:2", "path:1,2", "star_join:3"):
        with pytest.raises(GraphError):
            FamilySpec.parse(bad)
    with pytest.raises(GraphError):
        generate("cycle:2")
    with pytest.raises(GraphError):
        generate("path_join:3,-1")


def test_formula_examples():
    assert formula_gamma_middle("star:4") == 4
    assert formula_gamma_middle("kbip:2,3") == 3
    assert formula_gamma_middle("path:2") == 1
    assert formula_gamma_middle(FamilySpec("friendship", (3,))) == 4
    assert formula_gamma_middle("corona", 5) == 5
    assert formula_gamma_middle("corona2", 4, 2) == 6
    assert formula_gamma_middle("join_big_p", 4, 6) == 6


@pytest.mark.parametrize(
    "descriptor",
    ["double_star:1", "kbip:3,2", "friendship:1", "path:1", "star_join:3,3", "cycle_join:4,4"],
)
def test_formula_outside_domain(descriptor):
    with pytest.raises(NotApplicable):
        formula_gamma_middle(descriptor)


def test_formula_errors():
    with pytest.raises(NotApplicable):
        formula_gamma_middle("hypercube")
    with pytest.raises(NotApplicable):
        formula_gamma_middle("star", 1, 2)


def test_every_formula_has_anchor_and_domain():
    for entry in FORMULAS.values():
        assert entry.anchor and entry.domain


def family_cases():
    for n in range(2, 13):
        yield f"path:{n}"
        yield f"complete:{n}"
    for n in range(3, 13):
        yield f"cycle:{n}"
    for n in range(1, 9):
        yield f"star:{n}"
    for n in range(2, 9):
        yield f"double_star:{n}"
    for n in range(3, 11):
        yield f"wheel:{n}"
    for n in range(4, 12):
        yield f"wheel_order:{n}"
    for a in range(1, 7):
        for b in range(a, 7):
            yield f"kbip:{a},{b}"
    for n in range(2, 6):
        yield f"friendship:{n}"
    for n in range(1, 5):
        for p in range(0, 7):
            if p != n:
                yield f"star_join:{n},{p}"
    for base in ("path", "cycle", "complete", "wheel"):
        for n in range(3, 6):
            for p in range(n):
                yield f"{base}_join:{n},{p}"


@pytest.mark.parametrize("descriptor", list(family_cases()))
def test_formula_agrees_with_solvers(descriptor):
    g = generate(descriptor)
    value = formula_gamma_middle(descriptor)
    assert gamma_middle_fast(g).value == value
    if g.n + g.m <= 30:
        assert gamma_middle_oracle(middle_graph(g)).value == value


def test_star_join_diagonal():
    for n in range(1, 6):
        g = join_empty(star(n), n)
        assert gamma_middle_fast(g).value == star_join_diagonal(n)
        assert gamma_middle_oracle(middle_graph(g)).value == n + 1


def test_wheel_rim_reading_fails_exactly_at_even_rims():
    for n in range(3, 11):
        true_value = gamma_middle_fast(wheel(n)).value
        assert (wheel_rim_reading(n) == true_value) == (n % 2 == 1)


def test_coronas_and_big_joins_on_small_bases():
    for base in (path(3), cycle(4), star(3), complete(4)):
        n = base.n
        g0 = gamma_middle_fast(base).value
        assert gamma_middle_fast(corona_k1(base)).value == formula_gamma_middle("corona", n)
        assert gamma_middle_fast(corona_p2(base)).value == formula_gamma_middle("corona2", n, g0)
        for p in range(n, 2 * n + 1):
            assert gamma_middle_fast(join_empty(base, p)).value == formula_gamma_middle("join_big_p", n, p)


def test_hamiltonian_route_families():
    for n in range(3, 9):
        assert cycle(n).has_hamiltonian_path()
        assert wheel(n).has_hamiltonian_path()
        assert complete(n).has_hamiltonian_path()
