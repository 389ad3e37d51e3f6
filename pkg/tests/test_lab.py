from fractions import Fraction
from itertools import product

import pytest

import oracles
from superinterval import (
    NATURALS,
    NONNEG_RATIONALS,
    UNIT_RATIONALS,
    PartitionSpec,
    add,
    column,
    zero,
    residues,
    row,
)
from superinterval.errors import (
    BudgetExceeded,
    CarrierEmpty,
    DomainOverflow,
    GeneratorOutsideCarrier,
    MapUndefined,
    NoneFound,
    UnorderedDomain,
)
from superinterval.lab import (
    ADDITIVE_INVERSE,
    FAILS,
    HOLDS_EXHAUSTIVE,
    HOLDS_SAMPLED,
    HOLDS_STRUCTURAL,
    IDEMPOTENT,
    INAPPLICABLE,
    UNIT_PAIR,
    ZERO_DIVISOR,
    Budget,
    CarrierSpec,
    ScalarActionSpec,
    StructureReport,
    Verdict,
    check_direct_sum,
    check_group,
    check_ideal,
    check_lattice,
    check_linear_map,
    check_semigroup,
    check_semiring,
    check_strictness,
    combine,
    distributivity_sides,
    find_generating_set,
    find_witnesses,
    in_span,
    is_independent,
    span,
)

F = Fraction


def statuses(rep):
    return {k: v.status for k, v in rep.verdicts.items()}


# -- carriers ----------------------------------------------------------------


def test_carrier_pattern_ties_and_pins():
    c = CarrierSpec(residues(5), PartitionSpec(1, 4, (), (2,)), pattern=[[1, 0, 2, 1]])
    assert c.size() == 25
    m = c.matrix((3, 4))
    assert m.flat() == (3, 0, 4, 3)
    assert c.coords(m) == (3, 4)
    assert not c.contains(row(residues(5), [3, 1, 4, 3], [2]))
    with pytest.raises(GeneratorOutsideCarrier):
        c.coords(row(residues(5), [3, 0, 4, 2], [2]))
    elems = list(c.elements())
    assert len(elems) == 25 and elems[0].is_zero and elems == sorted(elems, key=lambda x: x.flat())


def test_action_spec():
    a = ScalarActionSpec("group", (3, 1, 3), residues(5))
    assert a.action_kind == "group" and a.scalar_set == (1, 3)
    assert ScalarActionSpec(domain=NATURALS).scalar_set == NATURALS
    with pytest.raises(ValueError):
        ScalarActionSpec("group", domain=NATURALS)
    with pytest.raises(ValueError):
        ScalarActionSpec("type-III")


def test_carrier_validation():
    with pytest.raises(UnorderedDomain):
        CarrierSpec(residues(3), PartitionSpec(1, 1), "min")
    with pytest.raises(DomainOverflow):
        CarrierSpec(UNIT_RATIONALS, PartitionSpec(1, 1), "add")
    with pytest.raises(CarrierEmpty):
        CarrierSpec(NATURALS, PartitionSpec(1, 1), "add", entry_pool=())
    with pytest.raises(ValueError):
        CarrierSpec(NATURALS, PartitionSpec(1, 1), "sub")
    with pytest.raises(ValueError):
        Budget(strategy="guess")


def test_zero_only_carrier():
    c = CarrierSpec(residues(4), PartitionSpec(1, 2), pattern=[[0, 0]])
    assert c.size() == 1 and [m.flat() for m in c.elements()] == [(0, 0)]
    assert check_group(c).holds


def test_failing_verdicts_need_witnesses():
    with pytest.raises(ValueError):
        Verdict(FAILS)
    with pytest.raises(AssertionError):
        StructureReport("x").add("law", Verdict(HOLDS_SAMPLED))


# -- axioms ------------------------------------------------------------------


@pytest.mark.parametrize("n", [2, 3, 6])
def test_residue_add_group_exhaustive(n):
    rep = check_group(CarrierSpec(residues(n), PartitionSpec(1, 3, (), (1,))))
    assert rep.holds
    assert set(statuses(rep).values()) == {HOLDS_EXHAUSTIVE}


def test_large_carrier_uses_positionwise_reduction():
    c = CarrierSpec(residues(43), PartitionSpec(4, 3, (3,), (1,)))
    rep = check_group(c)
    assert rep.holds and rep.carrier_size == 43 ** 12
    # too big to enumerate, so the laws are sampled with a recorded seed
    assert rep["associativity"].status == HOLDS_SAMPLED and rep.seed == 0


def test_hadamard_is_not_a_group():
    rep = check_group(CarrierSpec(residues(6), PartitionSpec(1, 2, (), (1,)), "hadamard"))
    assert rep["identity"].holds
    assert rep.details["identity element"][0].flat() == (1, 1)
    inv = rep["inverses"]
    assert inv.status == FAILS and inv.witness[0].flat() == (0, 0)


def test_nat_has_no_additive_inverses():
    rep = check_group(CarrierSpec(NATURALS, PartitionSpec(1, 2, (), (1,))))
    assert rep["inverses"].status == FAILS
    assert rep["inverses"].witness[0].flat() == (1, 1)
    assert rep["closure"].status == HOLDS_STRUCTURAL


def test_pool_not_closed_fails_closure():
    c = CarrierSpec(UNIT_RATIONALS, PartitionSpec(1, 2), "min", entry_pool=(F(1, 2), F(1)))
    assert check_semigroup(c).holds
    c = CarrierSpec(residues(6), PartitionSpec(1, 2), "add", entry_pool=(0, 1))
    rep = check_semigroup(c)
    assert rep["closure"].status == FAILS


def test_semiring_exhaustive_small():
    rep = check_semiring(CarrierSpec(residues(3), PartitionSpec(1, 2, (), (1,))))
    assert rep.holds and len(rep.verdicts) == 9
    assert rep["left-distributivity"].status == HOLDS_EXHAUSTIVE


@pytest.mark.parametrize("domain", [NATURALS, NONNEG_RATIONALS, residues(18)])
def test_semiring_sampled(domain):
    b = Budget(strategy="sample", sample_count=200, seed=3)
    rep = check_semiring(CarrierSpec(domain, PartitionSpec(2, 2, (1,), ())), b)
    assert rep.holds and rep.seed == 3 and rep.sample_count == 200


def test_sampling_is_deterministic():
    c = CarrierSpec(NONNEG_RATIONALS, PartitionSpec(1, 3))
    b = Budget(seed=11, sample_count=50)
    assert check_semiring(c, b).to_dict() == check_semiring(c, b).to_dict()


def test_distributivity_sides():
    x, y, z = (row(NATURALS, v, [2]) for v in ([3, 2, 1, 5, 1], [8, 1, 3, 1, 4], [7, 4, 2, 1, 4]))
    lhs, rhs = distributivity_sides(x, y, z)
    assert lhs == rhs


def test_lattice_laws():
    pool = tuple(F(k, 4) for k in range(5))
    rep = check_lattice(CarrierSpec(UNIT_RATIONALS, PartitionSpec(1, 2), "max", pool))
    assert rep.holds and rep["top"].holds and rep["bottom"].holds
    rep = check_lattice(CarrierSpec(NATURALS, PartitionSpec(1, 2), "max"))
    assert rep.holds and rep["top"].status == INAPPLICABLE
    with pytest.raises(UnorderedDomain):
        check_lattice(CarrierSpec(residues(5), PartitionSpec(1, 2)))


def test_strictness():
    z = CarrierSpec(residues(23), PartitionSpec(1, 7, (), (2, 6)))
    v = check_strictness(z)["strict"]
    assert v.status == FAILS
    a, b = v.witness
    assert a.flat() == (0,) * 6 + (1,) and b.flat() == (0,) * 6 + (22,)
    assert add(a, b).is_zero
    assert check_strictness(CarrierSpec(NATURALS, PartitionSpec(1, 3)))["strict"].status == HOLDS_STRUCTURAL
    assert check_strictness(CarrierSpec(residues(5), PartitionSpec(1, 2), "hadamard"))["strict"].status == INAPPLICABLE


# -- witness search ------------------------------------------------------------


def _brute_pairs(n, k, pred):
    vals = list(product(range(n), repeat=k))
    return [(x, y) for x in vals for y in vals if any(x) and any(y) and pred(x, y)]


def test_zero_divisor_search_matches_brute_force():
    z = residues(6)
    c = CarrierSpec(z, PartitionSpec(1, 2, (), (1,)), "hadamard")
    found = find_witnesses(c, ZERO_DIVISOR)
    assert found.verdict == "found"
    got = {(a.flat(), b.flat()) for a, b in found.witnesses}
    want = set(_brute_pairs(6, 2, lambda x, y: all(u * v % 6 == 0 for u, v in zip(x, y))))
    assert got == want


def test_idempotents_and_units():
    c = CarrierSpec(residues(12), PartitionSpec(1, 2), "hadamard")
    idem = find_witnesses(c, IDEMPOTENT)
    assert {w[0].flat() for w in idem.witnesses} == {(a, b) for a in (0, 1, 4, 9) for b in (0, 1, 4, 9)} - {(0, 0), (1, 1)}
    units = find_witnesses(c, UNIT_PAIR)
    # four units per position with unique inverses, minus the trivial pair
    assert len(units) == 15


def test_additive_inverse_pairs():
    c = CarrierSpec(residues(2), PartitionSpec(1, 2, (), (1,)))
    found = find_witnesses(c, ADDITIVE_INVERSE)
    assert [a.flat() for a, _ in found.witnesses] == [(0, 1), (1, 0), (1, 1)]


def test_seeded_search_only_uses_seeds():
    c = CarrierSpec(residues(12), PartitionSpec(1, 5, (), (3,)), "hadamard")
    seed = row(residues(12), [8, 4, 2, 6, 9], [3])
    found = find_witnesses(c, ZERO_DIVISOR, seeds=[seed], max_witnesses=5)
    assert len(found) == 5 and all(w[0] == seed for w in found.witnesses)


# -- spans and independence ----------------------------------------------------


def test_span_over_z5_matches_closure_oracle():
    g = row(residues(5), [1, 1, 1], [1])
    s = span([g], ScalarActionSpec())
    assert s.complete
    assert {m.flat() for m in s.elements} == oracles.closure_under_add([(1, 1, 1)], 5)


def test_bounded_span_is_marked_incomplete():
    g = row(NATURALS, [1, 2, 0, 0, 0, 1], [2, 5])
    s = span([g], ScalarActionSpec(scalars=tuple(range(6)), domain=NATURALS))
    assert len(s.elements) == 6 and not s.complete


def test_in_span_and_combine():
    z = residues(7)
    gens = [row(z, [1, 0, 2]), row(z, [0, 1, 3])]
    target = row(z, [3, 5, 0])
    cs = in_span(target, gens)
    assert cs is not None and combine(cs, gens) == target
    assert in_span(row(z, [0, 0, 1]), gens) is None


def test_nat_cone_membership():
    gens = [row(NATURALS, [1, 1]), row(NATURALS, [0, 2])]
    assert combine(in_span(row(NATURALS, [3, 7]), gens), gens).flat() == (3, 7)
    assert in_span(row(NATURALS, [3, 4]), gens) is None  # needs 3 of the first, then 1/2 of the second


def test_qplus_cone_membership():
    gens = [row(NONNEG_RATIONALS, [1, 1]), row(NONNEG_RATIONALS, [0, 2])]
    cs = in_span(row(NONNEG_RATIONALS, [3, 4]), gens)
    assert cs is not None and all(c >= 0 for c in cs)
    assert combine(cs, gens).flat() == (3, 4)
    assert in_span(row(NONNEG_RATIONALS, [3, 2]), gens) is None


def test_independence_certificate():
    units = [row(NATURALS, [1 if k == j else 0 for k in range(5)], [2]) for j in range(5)]
    v6 = row(NATURALS, [7, 2, 5, 9, 3], [2])
    assert is_independent(units).independent
    res = is_independent(units + [v6])
    assert not res.independent
    assert res.certificate == {"index": 5, "coefficients": {0: 7, 1: 2, 2: 5, 3: 9, 4: 3}}
    pw = is_independent([row(NATURALS, [1, 2]), row(NATURALS, [2, 4])], mode="pairwise",
                        action=ScalarActionSpec(scalars=(0, 1, 2, 3), domain=NATURALS))
    assert not pw.independent and pw.certificate["scalar"] == 2


def test_generating_sets():
    c = CarrierSpec(residues(7), PartitionSpec(3, 1, (1,), ()), pattern=[[1], [1], [1]])
    gs = find_generating_set(c, ScalarActionSpec("group"))
    assert gs.dimension == 1 and gs.generators[0].flat() == (1, 1, 1)
    full = CarrierSpec(residues(3), PartitionSpec(1, 3, (), (1,)))
    assert find_generating_set(full).dimension == 3
    with pytest.raises(BudgetExceeded):
        find_generating_set(CarrierSpec(NATURALS, PartitionSpec(1, 2)))


# -- direct sums, ideals, maps ---------------------------------------------


def _unit_row(z, n, j, cuts=()):
    return row(z, [1 if k == j else 0 for k in range(n)], cuts)


def test_direct_sum_small():
    z = residues(4)
    whole = CarrierSpec(z, PartitionSpec(1, 3, (), (1,)))
    parts = [[_unit_row(z, 3, 0, [1])], [_unit_row(z, 3, 1, [1]), _unit_row(z, 3, 2, [1])]]
    rep = check_direct_sum(parts, whole)
    assert rep.holds and rep.details["classification"] == "direct"


def test_pseudo_direct_sum_reports_overlap():
    z = residues(4)
    whole = CarrierSpec(z, PartitionSpec(1, 3, (), (1,)))
    parts = [[_unit_row(z, 3, 0, [1]), _unit_row(z, 3, 1, [1])], [_unit_row(z, 3, 1, [1]), _unit_row(z, 3, 2, [1])]]
    rep = check_direct_sum(parts, whole)
    assert rep["covers"].holds
    assert rep["pairwise-trivial"].status == FAILS
    assert rep.details["classification"] == "pseudo-direct"


def test_sum_that_misses_the_carrier():
    z = residues(4)
    whole = CarrierSpec(z, PartitionSpec(1, 3, (), (1,)))
    rep = check_direct_sum([[_unit_row(z, 3, 0, [1])]], whole)
    assert rep["covers"].status == FAILS
    assert rep.details["classification"] == "neither"


def test_ideals(carrier_file):
    cf = carrier_file("z7_ideal_block")
    assert check_ideal(cf.generators, cf.carrier)["absorbs"].status == HOLDS_EXHAUSTIVE
    cf = carrier_file("z7_ideal_constant")
    v = check_ideal(cf.generators, cf.carrier)["absorbs"]
    assert v.status == FAILS and v.witness


def test_linear_maps(carrier_file):
    for name in ("nat_permuting_operator", "nat_row_to_column_pair"):
        cf = carrier_file(name)
        assert check_linear_map(cf.map_rule, cf.carrier, cf.map_target, cf.action).holds
    cf = carrier_file("nat_affine_map")
    rep = check_linear_map(cf.map_rule, cf.carrier, cf.map_target, cf.action)
    assert rep["linearity"].status == FAILS


def test_linear_map_from_table():
    z = residues(2)
    src = CarrierSpec(z, PartitionSpec(1, 2))
    dst = CarrierSpec(z, PartitionSpec(2, 1))
    table = {m: column(z, list(m.flat())) for m in src.elements()}
    rep = check_linear_map(table, src, dst)
    assert rep.holds and rep["linearity"].status == HOLDS_EXHAUSTIVE
    partial = dict(list(table.items())[:2])
    with pytest.raises(MapUndefined):
        check_linear_map(partial, src, dst)


# -- edge cases named by the contracts -------------------------------------


def test_exhaustive_search_without_witness_raises():
    c = CarrierSpec(residues(2), PartitionSpec(1, 2), "hadamard")
    with pytest.raises(NoneFound) as info:
        find_witnesses(c, UNIT_PAIR)
    assert info.value.search.verdict == "none-exhaustive"
    # a sampled or truncated search is merely undecided
    big = CarrierSpec(NATURALS, PartitionSpec(1, 2), "hadamard")
    assert find_witnesses(big, UNIT_PAIR).verdict == "unknown"


def test_unit_min_semigroup_identity_is_all_ones():
    rep = check_semigroup(CarrierSpec(UNIT_RATIONALS, PartitionSpec(1, 3, (), (1,)), "min"))
    assert rep["identity"].holds
    assert rep.details["identity element"][0].flat() == (1, 1, 1)


def test_zero_generators():
    z = residues(7)
    p = PartitionSpec(1, 3, (), (1,))
    c = CarrierSpec(z, p, "hadamard")
    assert check_ideal([zero(z, p)], c).holds
    s = span([zero(z, p)])
    assert [m.flat() for m in s.elements] == [(0, 0, 0)]
    assert is_independent([row(z, [1, 0, 3], [1])]).independent
    empty = CarrierSpec(z, p, pattern=[[0, 0, 0]])
    gs = find_generating_set(empty)
    assert gs.dimension == 0 and gs.carrier_size == 1


def test_constant_row_over_z43():
    c = CarrierSpec(residues(43), PartitionSpec(1, 6, (), (2, 4)), pattern=[[1] * 6])
    gs = find_generating_set(c, ScalarActionSpec("group"))
    assert gs.carrier_size == 43 and gs.dimension == 1


def test_single_part_direct_sum():
    z = residues(3)
    whole = CarrierSpec(z, PartitionSpec(1, 2, (), (1,)))
    gens = [_unit_row(z, 2, 0, [1]), _unit_row(z, 2, 1, [1])]
    rep = check_direct_sum([gens], whole)
    assert rep.holds and rep.details["classification"] == "direct"


def test_identity_map_is_linear():
    src = CarrierSpec(residues(3), PartitionSpec(1, 2, (), (1,)))
    assert check_linear_map(lambda v: v, src, src).holds
    nat = CarrierSpec(NATURALS, PartitionSpec(2, 1))
    assert check_linear_map(lambda v: v, nat, nat).holds


def test_span_budget():
    z = residues(43)
    gens = [_unit_row(z, 4, j) for j in range(4)]
    with pytest.raises(BudgetExceeded):
        span(gens, b=Budget(exhaustive_limit=1000))
