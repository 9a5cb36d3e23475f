from fractions import Fraction

import pytest

from cyclopair.bernoulli import IrregularSet, irregular_indices
from cyclopair.criteria import (
    CONDITIONAL,
    FAILS,
    FLAG_ASSUMED,
    FLAG_FALSE_UNKNOWN,
    FLAG_TRUE,
    FLAG_UNKNOWN,
    HOLDS,
    INCONCLUSIVE,
    TRIVIAL,
    HypothesisFlags,
    gk_verdict,
    greenberg_verdict,
    height_lower_bound,
    remark_ranges_check,
)
from cyclopair.eigenstructure import check_congruences
from cyclopair.pairing import EligibleSet, PairingTable, eligible_set, synth_b_table, synth_table

IRR_157 = IrregularSet(157, (62, 110))
IRR_37 = IrregularSet(37, (32,))


def flags_for(p, **overrides):
    base = HypothesisFlags.defaults_for(p)
    return HypothesisFlags(
        overrides.get("vandiver", base.vandiver),
        overrides.get("procyclic", base.procyclic),
        overrides.get("pairing_surjective", base.pairing_surjective),
    )


def test_default_flags():
    f = HypothesisFlags.defaults_for(157)
    assert f == HypothesisFlags(FLAG_ASSUMED, FLAG_ASSUMED, FLAG_TRUE)
    f = HypothesisFlags.defaults_for(1217)
    assert f.pairing_surjective == FLAG_UNKNOWN
    f = HypothesisFlags.defaults_for(13_000_000)
    assert f.vandiver == FLAG_FALSE_UNKNOWN and f.procyclic == FLAG_FALSE_UNKNOWN


def test_flags_validate():
    with pytest.raises(ValueError):
        HypothesisFlags("yes", FLAG_ASSUMED, FLAG_TRUE)
    with pytest.raises(ValueError):
        HypothesisFlags(FLAG_ASSUMED, FLAG_ASSUMED, "maybe")


# --- pseudo-nullity criterion ---

def test_greenberg_regular_trivial():
    irr = irregular_indices(11)
    v = greenberg_verdict(irr, eligible_set(irr, None), flags_for(11))
    assert v.status == TRIVIAL


def test_greenberg_holds_on_full_table():
    table = synth_table(157, IRR_157, seed=4)
    v = greenberg_verdict(IRR_157, eligible_set(IRR_157, table), flags_for(157))
    assert v.status == HOLDS


def test_greenberg_inconclusive_on_complete_empty():
    zero_keys = {(i, 62) for i in range(1, 156, 2)}
    table = synth_table(157, IRR_157, zero_keys=zero_keys, seed=4)
    elig = eligible_set(IRR_157, table)
    assert elig.eligible == () and elig.complete
    v = greenberg_verdict(IRR_157, elig, flags_for(157))
    assert v.status == INCONCLUSIVE


def test_greenberg_conditional_on_missing():
    elig = eligible_set(IRR_157, PairingTable(157))  # nothing known
    v = greenberg_verdict(IRR_157, elig, flags_for(157))
    assert v.status == CONDITIONAL


def test_greenberg_requires_matching_prime():
    with pytest.raises(ValueError):
        greenberg_verdict(IRR_157, eligible_set(IRR_37, None), flags_for(157))


def test_greenberg_without_vandiver():
    table = synth_table(157, IRR_157, seed=4)
    v = greenberg_verdict(
        IRR_157, eligible_set(IRR_157, table),
        flags_for(157, vandiver=FLAG_FALSE_UNKNOWN),
    )
    assert v.status == INCONCLUSIVE


# --- height lower bound ---

def test_height_singleton_full():
    table = synth_table(37, IRR_37, seed=1)
    hb = height_lower_bound(IRR_37, eligible_set(IRR_37, table), flags_for(37))
    assert hb.d == 18 and hb.bound_exact == 19
    assert hb.bound_corollary == Fraction(19)
    assert hb.corollary_ceiling == 19
    assert not hb.partial and not hb.zero_module


def test_height_corollary_formula():
    # fabricated complete data: s = 20 with r = 2 gives 20/3 + 1 = 23/3
    irr = IrregularSet(53, (2, 4))
    elig = EligibleSet(53, tuple(range(1, 41, 2)), ())
    hb = height_lower_bound(irr, elig, flags_for(53))
    assert hb.bound_corollary == Fraction(23, 3)
    assert hb.corollary_ceiling == 8
    assert hb.bound_exact >= hb.corollary_ceiling


def test_height_s_zero():
    irr = IrregularSet(53, (2, 4))
    elig = EligibleSet(53, (), ())
    hb = height_lower_bound(irr, elig, flags_for(53))
    assert hb.d == 0 and hb.bound_exact == 1
    assert hb.bound_corollary == Fraction(1) and hb.corollary_ceiling == 1


def test_height_zero_module_sentinel():
    irr = irregular_indices(11)
    hb = height_lower_bound(irr, eligible_set(irr, None), flags_for(11))
    assert hb.zero_module
    assert hb.d is None and hb.bound_exact is None and hb.bound_corollary is None


def test_height_partial_data_conservative():
    table = PairingTable(157, {}, {(i, 62): 1 for i in range(1, 156, 2)})
    elig = eligible_set(IRR_157, table)  # 110-column entirely missing
    assert not elig.complete
    hb = height_lower_bound(IRR_157, elig, flags_for(157))
    assert hb.partial
    assert hb.bound_corollary is None
    assert hb.d == 0 and hb.bound_exact == 1


def test_height_requires_vandiver():
    with pytest.raises(ValueError):
        height_lower_bound(
            IRR_37, eligible_set(IRR_37, None),
            flags_for(37, vandiver=FLAG_FALSE_UNKNOWN),
        )


def test_height_exact_dominates_corollary_on_complete_data():
    # the counting argument is realized by the greedy solver, so the exact
    # bound can never fall below the corollary ceiling
    for p in (157, 353, 379):
        irr = irregular_indices(p)
        elig = eligible_set(irr, synth_table(p, irr, seed=8))
        hb = height_lower_bound(irr, elig, flags_for(p))
        assert hb.bound_exact >= hb.corollary_ceiling


# --- abelianness criterion ---

def gk_for(irr, table, **overrides):
    return gk_verdict(irr, check_congruences(irr), table, flags_for(irr.p, **overrides))


def test_gk_rank_le_1_holds():
    irr = irregular_indices(11)
    assert gk_for(irr, None).status == HOLDS
    assert gk_for(IRR_37, None).status == HOLDS  # r = 1, no table needed


def test_gk_zero_pair_fails_unconditionally():
    table = synth_b_table(157, IRR_157, zero_pairs={(62, 110)}, seed=1)
    v = gk_for(IRR_157, table, pairing_surjective=FLAG_UNKNOWN)
    assert v.status == FAILS
    assert v.detail["zero_pairs"] == [(62, 110)]


def test_gk_all_nonzero_surjective_holds():
    table = synth_b_table(157, IRR_157, seed=1)
    v = gk_for(IRR_157, table)  # p < 1000: surjectivity known
    assert v.status == HOLDS


def test_gk_all_nonzero_unknown_surjectivity_conditional():
    irr = irregular_indices(1217)
    table = synth_b_table(1217, irr, seed=1)
    v = gk_for(irr, table)
    assert v.status == CONDITIONAL
    assert "surjective" in v.detail["reason"]


def test_gk_e_backed_nonzero_needs_no_surjectivity():
    # nonzero e-entries pin the pairing values themselves
    irr = irregular_indices(1217)
    e_entries = {(1217 - k, kp): 3 for idx, k in enumerate(irr.indices)
                 for kp in irr.indices[idx + 1:]}
    v = gk_for(irr, PairingTable(1217, {}, e_entries))
    assert v.status == HOLDS


def test_gk_zero_e_entry_fails():
    irr = irregular_indices(1217)
    e_entries = {(1217 - 784, 866): 0}
    v = gk_for(irr, PairingTable(1217, {}, e_entries))
    assert v.status == FAILS


def test_gk_missing_pairs_conditional():
    v = gk_for(IRR_157, PairingTable(157))
    assert v.status == CONDITIONAL
    assert v.detail["missing_pairs"] == [(62, 110)]


def test_gk_congruence_violation_inconclusive():
    irr = IrregularSet(13, (4, 10))  # synthetic: 4 + 10 == 2 mod 12
    table = synth_b_table(13, irr, seed=1)
    v = gk_verdict(irr, check_congruences(irr), table, flags_for(13))
    assert v.status == INCONCLUSIVE


def test_gk_without_hypotheses_inconclusive():
    table = synth_b_table(157, IRR_157, seed=1)
    v = gk_for(IRR_157, table, procyclic=FLAG_FALSE_UNKNOWN)
    assert v.status == INCONCLUSIVE


def test_gk_zero_dominates_missing():
    # one pair zero, the other pairs absent: still FAILS
    irr = irregular_indices(1217)
    table = PairingTable(1217, {(784, 866): 0}, {})
    assert gk_for(irr, table).status == FAILS


def test_gk_monotone_toward_fails():
    table = synth_b_table(157, IRR_157, seed=1)
    base = gk_for(IRR_157, table).status
    zeroed = PairingTable(157, {(62, 110): 0}, {})
    assert base == HOLDS
    assert gk_for(IRR_157, zeroed).status == FAILS


def test_verdicts_are_pure():
    table = synth_b_table(157, IRR_157, seed=1)
    assert gk_for(IRR_157, table) == gk_for(IRR_157, table)


# --- remark ranges ---

def test_remark_ranges():
    violations, skipped = remark_ranges_check([
        (97, 1, (97 - 1) // 2 - 4),     # gap 4 in [2, 6]: fine
        (101, 2, (101 - 1) // 2 - 5),   # gap 5 outside [6, 8]: violation
        (103, 0, 51),                   # regular: no constraint
        (107, 2, None),                 # incomplete data: skipped
        (109, 4, 40),                   # r > 3: violation
    ])
    assert violations == [(101, 2, 5), (109, 4, 14)]
    assert skipped == [107]


def test_remark_ranges_empty():
    assert remark_ranges_check([]) == ([], [])
