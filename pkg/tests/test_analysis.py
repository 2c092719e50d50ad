import json
from fractions import Fraction

import pytest

from intervalsemirings import (
    PolyBasis,
    ROW,
    SQUARE,
    SemiringHandle,
    SpecError,
    build_groupoid,
    build_loop,
    chain_lattice,
    check_homomorphism,
    check_laws,
    check_substructure,
    classify_semiring,
    cyclic_group,
    domain_elements,
    element,
    find_idempotents,
    find_nilpotents,
    find_s_special,
    find_units,
    find_zero_divisors,
    make_spec,
    matrix_zd_comparison,
    mult_semigroup_zn,
    nat_interval,
    neutro_mixed,
    neutro_pure,
    rat_interval,
    semifield_within,
    smarandache_search,
    sweep_passed,
    table_lattice,
    theorem_sweep,
    validate_s_certificate,
    verify_axioms,
    zn_interval,
)


def dh(d):
    return SemiringHandle.for_domain(d)


def fsh(coeff, basis, **kw):
    return SemiringHandle.for_formal_sums(make_spec(coeff, basis, **kw))


def mh(d, shape):
    return SemiringHandle.for_matrices(d, shape)


# ---------------------------------------------------------------------------
# zero divisors


def test_zn18_zero_divisors_exhaustive():
    r = find_zero_divisors(dh(zn_interval(18)))
    assert r.exhaustive
    assert len(r.findings) == 15
    assert all(f.kind == "zero-divisor" for f in r.findings)
    pairs = {f.witness for f in r.findings}
    assert ("[0,6]", "[0,3]") in pairs
    assert ("[0,9]", "[0,2]") in pairs
    assert r.budget_spent["pairs_scanned"] == 153  # C(18,2) + 18 self-pairs


def test_zero_divisor_witnesses_multiply_to_zero():
    h = dh(zn_interval(18))
    for f in find_zero_divisors(h).findings:
        a, b = f.elements
        assert h.mul(a, b) == h.zero


def test_zn_prime_has_none():
    r = find_zero_divisors(dh(zn_interval(23)))
    assert r.exhaustive and not r.findings


def test_nat_domain_structurally_clean():
    r = find_zero_divisors(dh(nat_interval()))
    assert r.exhaustive and not r.findings
    assert r.budget_spent["pairs_scanned"] == 0


def test_diamond_lattice_zero_divisor():
    d = table_lattice(
        ((0, 1, 2, 3), (1, 1, 3, 3), (2, 3, 2, 3), (3, 3, 3, 3)),
        ((0, 0, 0, 0), (0, 1, 0, 1), (0, 0, 2, 2), (0, 1, 2, 3)),
        names=("0", "a", "b", "1"))
    r = find_zero_divisors(dh(d))
    assert r.exhaustive
    assert ("b", "a") in {f.witness for f in r.findings}


def test_formal_sum_zero_divisors_lift_from_domain():
    h = fsh(zn_interval(4), cyclic_group(3))
    r = find_zero_divisors(h)
    assert r.findings
    for f in r.findings:
        a, b = f.elements
        assert h.mul(a, b) == h.zero
    assert r.exhaustive  # 64 elements: small enough for a full pair scan


def test_large_formal_sum_found_by_pattern():
    h = fsh(zn_interval(4), cyclic_group(12))  # 4^12 elements
    r = find_zero_divisors(h)
    assert r.findings and not r.exhaustive
    a, b = r.findings[0].elements
    assert h.mul(a, b) == h.zero


def test_formal_sum_absorption_collision():
    h = fsh(nat_interval(), mult_semigroup_zn(4))
    r = find_zero_divisors(h)
    assert ("[0,1]*2b", "[0,1]*2b") in {f.witness for f in r.findings}


def test_formal_sum_structurally_clean():
    # strict zero-divisor-free domain, group basis: no zero divisors
    r = find_zero_divisors(fsh(nat_interval(), cyclic_group(3)))
    assert r.exhaustive and not r.findings


def test_infinite_domain_intervals_clean():
    r = find_zero_divisors(dh(rat_interval()))
    assert r.exhaustive and not r.findings


def test_budget_truncates_scan():
    r = find_zero_divisors(dh(zn_interval(18)), budget=10)
    assert not r.exhaustive
    assert r.budget_spent["pairs_scanned"] <= 10


# ---------------------------------------------------------------------------
# idempotents, units, nilpotents


def test_zn12_idempotents():
    r = find_idempotents(dh(zn_interval(12)))
    vals = sorted(f.elements[0].a for f in r.findings)
    assert vals == [0, 1, 4, 9]
    assert r.exhaustive


def test_rat_idempotents_structural():
    r = find_idempotents(dh(rat_interval()))
    assert {f.witness[0] for f in r.findings} == {"[0,0]", "[0,1]"}
    assert r.exhaustive


def test_neutro_idempotents():
    r = find_idempotents(dh(neutro_mixed(rat_interval())))
    assert {f.witness[0] for f in r.findings} == {"[0,0]", "[0,1]", "[0,1I]"}


def test_zn23_units():
    r = find_units(dh(zn_interval(23)))
    assert len(r.findings) == 22
    pairs = {f.witness for f in r.findings}
    assert ("[0,8]", "[0,3]") in pairs
    assert ("[0,22]", "[0,22]") in pairs


def test_units_need_identity():
    with pytest.raises(SpecError):
        find_units(dh(nat_interval(3)))


def test_units_need_finite_handle():
    with pytest.raises(SpecError):
        find_units(dh(rat_interval()))


def test_zn8_nilpotents():
    r = find_nilpotents(dh(zn_interval(8)))
    byval = {f.elements[0].a: f.kind for f in r.findings}
    assert byval == {2: "nilpotent-index-3", 4: "nilpotent-index-2",
                     6: "nilpotent-index-3"}


def test_nilpotent_index_bounds():
    with pytest.raises(SpecError):
        find_nilpotents(dh(zn_interval(8)), max_index=1)
    with pytest.raises(SpecError):
        find_nilpotents(dh(zn_interval(8)), max_index=9)


# ---------------------------------------------------------------------------
# smarandache special elements


def test_zn24_s_zero_divisors():
    r = find_s_special(dh(zn_interval(24)), "s-zero-divisor")
    assert len(r.findings) == 11
    first = tuple(x.a for x in r.findings[0].elements)
    assert first == (4, 12, 6, 2)
    h = dh(zn_interval(24))
    for f in r.findings:
        assert validate_s_certificate(h, "s-zero-divisor", f.elements)


def test_zn12_s_idempotents():
    r = find_s_special(dh(zn_interval(12)), "s-idempotent")
    got = sorted(tuple(x.a for x in f.elements) for f in r.findings)
    assert got == [(4, 8), (9, 3)]


def test_zn13_has_no_s_idempotents():
    assert not find_s_special(dh(zn_interval(13)), "s-idempotent").findings


def test_zn12_s_anti_zero_divisors():
    r = find_s_special(dh(zn_interval(12)), "s-anti-zero-divisor")
    assert len(r.findings) == 11
    assert tuple(x.a for x in r.findings[0].elements) == (1, 2, 3, 4)
    h = dh(zn_interval(12))
    for f in r.findings:
        assert validate_s_certificate(h, "s-anti-zero-divisor", f.elements)


def test_zn23_s_units():
    r = find_s_special(dh(zn_interval(23)), "s-unit")
    assert len(r.findings) == 20
    h = dh(zn_interval(23))
    for f in r.findings:
        assert validate_s_certificate(h, "s-unit", f.elements)


def test_zn4_has_no_s_units():
    assert not find_s_special(dh(zn_interval(4)), "s-unit").findings


def test_rat_s_unit_pattern():
    h = dh(rat_interval())
    r = find_s_special(h, "s-unit")
    assert r.findings and not r.exhaustive
    f = r.findings[0]
    assert validate_s_certificate(h, "s-unit", f.elements)


def test_nat_has_no_s_zero_divisors():
    r = find_s_special(dh(nat_interval()), "s-zero-divisor")
    assert r.exhaustive and not r.findings


def test_unknown_s_kind_rejected():
    with pytest.raises(SpecError):
        find_s_special(dh(zn_interval(12)), "s-prime")


def test_row_tuple_s_certificates():
    h6 = mh(rat_interval(), (ROW, 6))
    r = find_s_special(h6, "s-zero-divisor")
    assert r.findings
    assert validate_s_certificate(h6, "s-zero-divisor",
                                  r.findings[0].elements)
    h9 = mh(rat_interval(), (ROW, 9))
    r = find_s_special(h9, "s-anti-zero-divisor")
    assert r.findings
    assert validate_s_certificate(h9, "s-anti-zero-divisor",
                                  r.findings[0].elements)


# ---------------------------------------------------------------------------
# classification


def test_zn11_classification_witnesses():
    c = classify_semiring(dh(zn_interval(11)))
    assert not c.strict and not c.semifield
    assert c.commutative and c.has_one and c.zero_divisor_free
    assert c.witnesses["strict"] == ("[0,6]", "[0,5]")
    assert c.exhaustive


def test_zn15_zero_divisor_witness_minimal():
    c = classify_semiring(dh(zn_interval(15)))
    assert not c.zero_divisor_free
    assert c.witnesses["zero_divisor_free"] == ("[0,5]", "[0,3]")


def test_nat_is_semifield():
    c = classify_semiring(dh(nat_interval()))
    assert c.strict and c.commutative and c.has_one
    assert c.zero_divisor_free and c.semifield and c.exhaustive


def test_nat_multiples_lack_identity():
    c = classify_semiring(dh(nat_interval(3)))
    assert c.strict and not c.has_one and not c.semifield


def test_neutro_mixed_rat_is_semifield():
    c = classify_semiring(dh(neutro_mixed(rat_interval())))
    assert c.semifield


def test_chain_lattice_is_semifield():
    c = classify_semiring(dh(chain_lattice(5)))
    assert c.semifield and c.exhaustive


def test_loop_lattice_semifield_needs_commutative_carrier():
    # over C2 no convolution can cancel, so the only semifield obstacle
    # is carrier commutativity: m = (n+1)/2
    good = classify_semiring(fsh(chain_lattice(2), build_loop(5, 3)))
    assert good.semifield and good.exhaustive
    bad = classify_semiring(fsh(chain_lattice(2), build_loop(5, 2)))
    assert not bad.commutative and not bad.semifield
    assert bad.zero_divisor_free
    # same dichotomy at n=7, settled at the carrier level
    assert check_laws(build_loop(7, 4)).commutative
    assert not check_laws(build_loop(7, 3)).commutative


def test_square_matrices_not_commutative():
    c = classify_semiring(mh(zn_interval(2), (SQUARE, 2)))
    assert not c.commutative and not c.zero_divisor_free
    assert not c.semifield


def test_semifield_within_subset():
    h = dh(chain_lattice(3))
    elems = sorted(h.elements(), key=h.key)
    ok, reason = semifield_within(h, [elems[0], elems[2]])
    assert ok
    ok, reason = semifield_within(h, [elems[1], elems[2]])
    assert not ok and reason == ("missing-zero",)


# ---------------------------------------------------------------------------
# substructures


def test_multiples_ideal_in_zn15():
    h = dh(zn_interval(15))
    subset = [element(zn_interval(15), v) for v in (0, 3, 6, 9, 12)]
    ok, witness = check_substructure(h, subset, "ideal")
    assert ok and witness is None


def test_multiples_pattern_on_nat():
    ok, witness = check_substructure(dh(nat_interval()), "multiples-of-3",
                                     "ideal")
    assert ok and witness is None


def test_bad_subset_witnessed():
    h = dh(zn_interval(15))
    subset = [element(zn_interval(15), v) for v in (0, 3, 7)]
    ok, witness = check_substructure(h, subset, "subsemiring")
    assert not ok
    assert witness[0] == "not-closed-under-addition"


def test_subsemiring_needs_zero():
    h = dh(zn_interval(15))
    subset = [element(zn_interval(15), v) for v in (3, 6)]
    ok, witness = check_substructure(h, subset, "subsemiring")
    assert not ok and witness[0] == "missing-zero"


def test_non_absorbing_subset_fails_ideal():
    h = dh(zn_interval(16))
    subset = [element(zn_interval(16), v) for v in (0, 4, 8, 12)]
    ok, _ = check_substructure(h, subset, "subsemiring")
    assert ok
    subset = [element(zn_interval(16), v) for v in (0, 1, 2)]
    ok, witness = check_substructure(h, subset, "subsemiring")
    assert not ok


def test_unknown_kind_rejected():
    with pytest.raises(SpecError):
        check_substructure(dh(zn_interval(6)), [], "coideal")


# ---------------------------------------------------------------------------
# smarandache semiring search


def test_chain3_semifield_subsets_exhaustive():
    r = smarandache_search(dh(chain_lattice(3)), mode="exhaustive")
    assert r.exhaustive
    subsets = {f.witness for f in r.findings}
    assert ("0", "a1") in subsets
    assert ("0", "1") in subsets


def test_zn6_is_not_smarandache():
    r = smarandache_search(dh(zn_interval(6)), mode="exhaustive")
    assert r.exhaustive and not r.findings


def test_loop_semiring_candidate_kinds():
    h = fsh(chain_lattice(2), build_loop(7, 3))
    cand = [h.zero,
            next(x for x in h.elements() if h.render(x) == "1*e"),
            next(x for x in h.elements() if h.render(x) == "1*g5"),
            next(x for x in h.elements()
                 if h.render(x) == "1*e + 1*g5")]
    r = smarandache_search(h, candidate=cand,
                           candidate_kind="semifield-subset")
    assert r.findings and r.findings[0].kind == "semifield-subset"
    r = smarandache_search(h, candidate=cand,
                           candidate_kind="s-subsemiring")
    assert r.findings
    r = smarandache_search(h, candidate=cand,
                           candidate_kind="s-pseudo-subsemiring")
    assert r.findings


def test_generated_mode_not_exhaustive():
    r = smarandache_search(dh(chain_lattice(3)), mode="generated")
    assert not r.exhaustive
    assert r.findings


# ---------------------------------------------------------------------------
# homomorphisms


def test_reduction_hom_zn4_to_zn2():
    h4, h2 = dh(zn_interval(4)), dh(zn_interval(2))
    f = {x: element(zn_interval(2), x.a % 2)
         for x in domain_elements(zn_interval(4))}
    r = check_homomorphism(f, h4, h2)
    assert r.ok and r.exhaustive
    assert sorted(x.a for x in r.kernel) == [0, 2]


def test_inclusion_hom_multiples_to_rat():
    src = dh(nat_interval(3))
    dst = dh(rat_interval())
    r = check_homomorphism(
        lambda x: element(rat_interval(), Fraction(x.a)), src, dst)
    assert r.ok and not r.exhaustive
    assert [x.a for x in r.kernel] == [0]


def test_bad_map_witnessed():
    h4, h2 = dh(zn_interval(4)), dh(zn_interval(2))
    f = {x: element(zn_interval(2), 1)
         for x in domain_elements(zn_interval(4))}
    r = check_homomorphism(f, h4, h2)
    assert not r.ok
    assert r.witness[0] == "zero"


# ---------------------------------------------------------------------------
# axiom verification


@pytest.mark.parametrize("h", [
    dh(zn_interval(12)),
    dh(chain_lattice(5)),
    dh(neutro_mixed(zn_interval(3))),
    fsh(zn_interval(2), cyclic_group(4)),
    fsh(zn_interval(3), cyclic_group(2)),
    mh(zn_interval(4), (ROW, 2)),
    mh(zn_interval(2), (SQUARE, 2)),
], ids=lambda h: h.describe())
def test_verify_axioms(h):
    ok, witness = verify_axioms(h)
    assert ok and witness is None


def test_verify_axioms_needs_finite_handle():
    with pytest.raises(SpecError):
        verify_axioms(dh(nat_interval()))


# ---------------------------------------------------------------------------
# sweeps


def test_sweep_zn_prime_clean():
    r = theorem_sweep("zn-prime-clean", pmax=31)
    assert sweep_passed(r)
    assert len(r.findings) == 11  # primes up to 31


def test_sweep_loop_laws():
    r = theorem_sweep("loop-laws", nmin=5, nmax=13)
    assert sweep_passed(r)


def test_sweep_composite_zd():
    r = theorem_sweep("zn-composite-zd", nmax=30)
    assert sweep_passed(r)
    assert len(r.findings) == 19  # composites in 4..30


def test_sweep_neutro_prime():
    r = theorem_sweep("neutro-prime-no-subsemiring", primes=(3, 5, 7))
    assert sweep_passed(r)


def test_unknown_sweep():
    with pytest.raises(SpecError):
        theorem_sweep("goldbach")


def test_unit_counts_match_totient():
    sympy = pytest.importorskip("sympy")
    for n in (7, 9, 12, 15, 23):
        r = find_units(dh(zn_interval(n)))
        assert len(r.findings) == sympy.totient(n)


def test_prime_sweep_instances_match_primerange():
    sympy = pytest.importorskip("sympy")
    r = theorem_sweep("zn-prime-clean", pmax=60)
    swept = [int(f.witness[0][2:]) for f in r.findings]
    assert swept == list(sympy.primerange(2, 61))


# ---------------------------------------------------------------------------
# report shape


def test_report_json_schema():
    r = find_zero_divisors(dh(zn_interval(6)))
    doc = json.loads(r.to_json_str())
    assert list(doc) == ["query", "exhaustive", "findings", "budget"]
    assert doc["budget"] == {"pairs_scanned": r.budget_spent["pairs_scanned"]}
    for f in doc["findings"]:
        assert list(f) == ["kind", "witness"]


def test_report_determinism():
    a = find_zero_divisors(dh(zn_interval(18))).to_json_str()
    b = find_zero_divisors(dh(zn_interval(18))).to_json_str()
    assert a == b


# ---------------------------------------------------------------------------
# matrix zero-divisor comparison


def test_matrix_zd_comparison_counts():
    r = matrix_zd_comparison(mh(zn_interval(4), (ROW, 2)))
    kinds = {}
    for f in r.findings:
        kinds[f.kind] = kinds.get(f.kind, 0) + 1
    assert kinds == {"zero-divisor": 18, "s-zero-divisor": 9, "zd-not-s": 9}
    assert r.exhaustive
