import random

import pytest

from df0l import (check_threshold_bounds, contains,
                  detect_unbounded_repetitive, factor_language, is_admissible,
                  is_strongly_synchronizing, is_weakly_synchronized,
                  power_system, strong_threshold, weak_power_transfer_bound,
                  weak_threshold)

from conftest import random_pdf0l, w


def test_weak_threshold_thue_morse(thue_morse):
    report = weak_threshold(thue_morse, 10)
    assert report.found and report.threshold == 3
    assert report.witness_word == w("aba")
    assert not is_weakly_synchronized(thue_morse, report.witness_word).synchronized


def test_weak_threshold_collapse(collapse_bounded, collapse_unbounded):
    assert weak_threshold(collapse_bounded, 10).threshold == 3
    assert weak_threshold(collapse_unbounded, 10).threshold == 3


def test_weak_threshold_repetitive_square(repetitive_square):
    report = weak_threshold(repetitive_square, 10)
    assert report.found and report.threshold == 1
    assert len(report.witness_word) == 1


def test_weak_threshold_square_power_diverges(repetitive_square):
    squared = power_system(repetitive_square, 2)
    report = weak_threshold(squared, 20)
    assert report.status == "cutoff_exceeded"
    assert report.last_level == 20
    assert report.survivors
    for word in report.survivors:
        assert len(word) == 20
        assert not is_weakly_synchronized(squared, word).synchronized
    bc4 = w("bc") * 4
    assert contains(squared, bc4)
    assert not is_weakly_synchronized(squared, bc4).synchronized


def test_strong_threshold_thue_morse(thue_morse):
    report = strong_threshold(thue_morse, 10)
    assert report.found and report.threshold == 1
    left, right = report.witness_pair
    assert len(left) == len(right) == 1
    assert is_admissible(thue_morse, left, right)
    assert not is_strongly_synchronizing(thue_morse, left, right)


def test_strong_threshold_collapse(collapse_bounded, collapse_unbounded):
    assert strong_threshold(collapse_bounded, 12).threshold == 3
    report = strong_threshold(collapse_unbounded, 15)
    assert report.found and report.threshold == 9
    left, right = report.witness_pair
    assert len(left) == len(right) == 9
    assert is_admissible(collapse_unbounded, left, right)
    assert not is_strongly_synchronizing(collapse_unbounded, left, right)


def test_strong_threshold_repetitive_square(repetitive_square):
    report = strong_threshold(repetitive_square, 10)
    assert report.status == "not_strongly_circular"
    assert report.repetition.repetitive
    assert report.repetition.witness == w("bc")


def test_detector_positive_forces_not_strongly_circular(repetitive_square):
    # cross-module consistency between the detector and the strong search
    assert detect_unbounded_repetitive(repetitive_square).repetitive
    assert strong_threshold(repetitive_square, 5).status == "not_strongly_circular"


def test_weak_divergence_comes_with_repetition_witness(repetitive_square):
    # where the weak search exhausts its cutoff, the detector certifies the
    # repetition responsible for it
    squared = power_system(repetitive_square, 2)
    assert weak_threshold(squared, 20).status == "cutoff_exceeded"
    verdict = detect_unbounded_repetitive(squared)
    assert verdict.repetitive
    for k in range(1, 4):
        assert contains(squared, verdict.witness * k)


def test_strong_search_without_precheck(repetitive_square, thue_morse):
    report = strong_threshold(repetitive_square, 4, repetitive_check=False)
    assert report.status == "cutoff_exceeded"
    assert report.last_level == 4
    for left, right in report.survivors:
        assert len(left) == len(right) == 4
        assert is_admissible(repetitive_square, left, right)
        assert not is_strongly_synchronizing(repetitive_square, left, right)
    assert strong_threshold(thue_morse, 10, repetitive_check=False).threshold == 1


def test_degenerate_thresholds():
    from conftest import sys1
    # two letters swapping: language is {ε, a, x}, everything synchronizes
    toy = sys1("ax", {"a": "x", "x": "a"}, ["a"])
    weak = weak_threshold(toy, 5)
    assert weak.found and weak.threshold == 0 and weak.witness_word is None
    strong = strong_threshold(toy, 5)
    assert strong.found and strong.threshold == 0 and strong.witness_pair is None

    # unary doubling: never weakly circular, and certified repetitive
    single = sys1("a", {"a": "aa"}, ["a"])
    assert weak_threshold(single, 8).status == "cutoff_exceeded"
    report = strong_threshold(single, 6)
    assert report.status == "not_strongly_circular"
    assert report.repetition.witness == w("a")


def test_weak_power_transfer_bound(thue_morse, repetitive_square):
    assert weak_power_transfer_bound(thue_morse, 2) == 2
    assert weak_power_transfer_bound(thue_morse, 3) == 4
    assert weak_power_transfer_bound(repetitive_square, 2) == 3
    with pytest.raises(ValueError):
        weak_power_transfer_bound(thue_morse, 1)


def test_threshold_bounds_on_fixtures(thue_morse, collapse_bounded,
                                      collapse_unbounded):
    check = check_threshold_bounds(thue_morse, 3, 1, 0)
    assert check.weak_ok and check.strong_checked and check.strong_ok

    check = check_threshold_bounds(collapse_bounded, 3, 3, 11)
    assert check.weak_ok and check.strong_ok

    check = check_threshold_bounds(collapse_unbounded, 3, 9)
    assert check.weak_ok and not check.strong_checked
    assert check.strong_ok is None


def test_found_reports_are_tight(thue_morse, collapse_bounded):
    for system, dw, ds in ((thue_morse, 3, 1), (collapse_bounded, 3, 3)):
        weak = weak_threshold(system, 10)
        assert (weak.threshold, len(weak.witness_word)) == (dw, dw)
        for word in factor_language(system, dw + 1).words_of_length(dw + 1):
            assert is_weakly_synchronized(system, word).synchronized
        strong = strong_threshold(system, 10)
        assert strong.threshold == ds
        for word in factor_language(system, 2 * ds + 2).words_of_length(2 * ds + 2):
            left, right = word[:ds + 1], word[ds + 1:]
            if is_admissible(system, left, right):
                assert is_strongly_synchronizing(system, left, right)


def test_powers_of_strongly_circular_systems_stay_weakly_circular(
        thue_morse, collapse_bounded, collapse_unbounded):
    # thresholds grow quickly under powers (TM^2: 6, TM^3: 12, squares of the
    # collapse systems: 17 and 19), so cutoffs are sized per case
    assert strong_threshold(thue_morse, 10).found
    assert weak_threshold(power_system(thue_morse, 2), 10).threshold == 6
    assert weak_threshold(power_system(thue_morse, 3), 16).threshold == 12
    for system, expected in ((collapse_bounded, 17), (collapse_unbounded, 19)):
        assert strong_threshold(system, 15).found
        assert weak_threshold(power_system(system, 2), 25).threshold == expected


def _oracle_weak(system, cutoff):
    last_bad = 0
    for level in range(1, cutoff + 1):
        words = factor_language(system, level).words_of_length(level)
        if all(is_weakly_synchronized(system, v).synchronized for v in words):
            return ("found", last_bad)
        last_bad = level
    return ("cutoff", None)


def _oracle_strong(system, cutoff):
    last_bad = 0
    for size in range(1, cutoff + 1):
        words = factor_language(system, 2 * size).words_of_length(2 * size)
        if all(is_strongly_synchronizing(system, v[:size], v[size:])
               for v in words if is_admissible(system, v[:size], v[size:])):
            return ("found", last_bad)
        last_bad = size
    return ("cutoff", None)


def test_threshold_searches_match_unpruned_oracles():
    """The level restrictions must not change any verdict."""
    rng = random.Random(4242)
    repetitive_cases = 0
    for _ in range(120):
        system = random_pdf0l(rng, max_letters=3, max_image_len=3)
        report = weak_threshold(system, 5)
        mine = ("found", report.threshold) if report.found else ("cutoff", None)
        assert mine == _oracle_weak(system, 5)

        report = strong_threshold(system, 4, repetitive_check=False)
        mine = ("found", report.threshold) if report.found else ("cutoff", None)
        assert mine == _oracle_strong(system, 4)

        if detect_unbounded_repetitive(system, 24).repetitive:
            # a certified repetition forbids any strong threshold
            assert not strong_threshold(system, 4, repetitive_check=False).found
            repetitive_cases += 1
    assert repetitive_cases > 20


def test_power_transfer_property_random():
    """Weak synchronization above the transfer bound descends from powers."""
    rng = random.Random(53)
    tested_words = 0
    for _ in range(60):
        system = random_pdf0l(rng, max_letters=3, max_image_len=3,
                              max_axioms=1, max_axiom_len=1)
        for k in (2, 3):
            bound = weak_power_transfer_bound(system, k)
            if bound > 9:
                continue
            powered = power_system(system, k)
            top = min(bound + 2, 11)
            lang = factor_language(system, top)
            for length in range(bound + 1, top + 1):
                for u in lang.words_of_length(length):
                    if is_weakly_synchronized(powered, u).synchronized:
                        assert is_weakly_synchronized(system, u).synchronized
                        tested_words += 1
    assert tested_words > 100
