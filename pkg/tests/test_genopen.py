import random

import pytest

from auratopo import GeneralizedClass, UniverseTooLarge, generalized_family, is_generalized_open
from auratopo.genopen import FAMILY_SCAN_LIMIT
from helpers import all_small_spaces, rand_space
from oracles import brute_closure, brute_interior


def _formula(n, scopes, a, cls):
    cl = lambda m: brute_closure(n, scopes, m)
    it = lambda m: brute_interior(n, scopes, m)
    if cls is GeneralizedClass.ALPHA:
        target = it(cl(it(a)))
    elif cls is GeneralizedClass.SEMI:
        target = cl(it(a))
    elif cls is GeneralizedClass.PRE:
        target = it(cl(a))
    else:
        target = cl(it(cl(a)))
    return not a & ~target


def test_membership_matches_formulas_on_every_small_space():
    for s in all_small_spaces(3):
        for a in range(1 << s.n):
            for cls in GeneralizedClass:
                assert is_generalized_open(s, a, cls) == _formula(s.n, s.scope_masks, a, cls)


def test_membership_matches_formulas_on_random_spaces():
    rng = random.Random(5)
    for _ in range(200):
        s = rand_space(rng, rng.randrange(1, 7))
        a = rng.randrange(0, 1 << s.n)
        cls = rng.choice(list(GeneralizedClass))
        assert is_generalized_open(s, a, cls) == _formula(s.n, s.scope_masks, a, cls)


def test_family_is_sorted_and_complete():
    rng = random.Random(6)
    s = rand_space(rng, 4)
    for cls in GeneralizedClass:
        fam = generalized_family(s, cls)
        masks = [ps.mask for ps in fam]
        assert masks == sorted(masks, key=lambda m: (bin(m).count("1"), m))
        expected = {a for a in range(1 << s.n) if _formula(s.n, s.scope_masks, a, cls)}
        assert set(masks) == expected


def test_family_scan_is_gated():
    labels = [str(i) for i in range(FAMILY_SCAN_LIMIT + 1)]
    opens = [[]] + [labels[: i + 1] for i in range(len(labels))]
    from auratopo import make_aura_space

    s = make_aura_space(labels, opens, {lab: labels[: i + 1] for i, lab in enumerate(labels)})
    with pytest.raises(UniverseTooLarge):
        generalized_family(s, GeneralizedClass.SEMI)


def test_accepts_class_by_value():
    for s in all_small_spaces(1):
        assert is_generalized_open(s, 0, "alpha")
        assert is_generalized_open(s, s.universe.full_mask, "beta")
