import pytest

from skewalg.words import (HOLE, ShapeTable, degree, enumerate_words,
                           format_word, graft, leaves, md_key, multidegree_of,
                           relabel, replace_hole, sort_key, word_count)


def test_degree_and_leaves():
    w = ((1, 2), 3)
    assert degree(w) == 3
    assert list(leaves(w)) == [1, 2, 3]
    assert degree(5) == 1


def test_multidegree_examples():
    assert multidegree_of((1, 2)) == {1: 1, 2: 1}
    assert multidegree_of(((1, 1), 2)) == {1: 2, 2: 1}
    assert multidegree_of(3) == {3: 1}


def test_format_word():
    assert format_word(1) == "x1"
    assert format_word(((1, 2), 3)) == "((x1*x2)*x3)"
    assert format_word(HOLE) == "_"


@pytest.mark.parametrize("md,count", [
    ({1: 1, 2: 1, 3: 1}, 12),
    ({1: 2, 2: 1}, 6),
    ({1: 1, 2: 1, 3: 1, 4: 1}, 120),
    ({1: 3}, 2),
    ({1: 1}, 1),
])
def test_enumerate_word_counts(md, count):
    ws = enumerate_words(md)
    assert len(ws) == count
    assert word_count(md) == count
    assert len(set(ws)) == count
    for w in ws:
        assert multidegree_of(w) == md


def _direct_words(leaf_seqs):
    """Independent generator: all bracketings over all leaf orderings."""
    def brackets(seq):
        if len(seq) == 1:
            return [seq[0]]
        out = []
        for cut in range(1, len(seq)):
            for a in brackets(seq[:cut]):
                for b in brackets(seq[cut:]):
                    out.append((a, b))
        return out

    out = set()
    for seq in leaf_seqs:
        out.update(brackets(seq))
    return out


def test_enumeration_matches_direct_generation():
    from itertools import permutations

    for md in [{1: 1, 2: 1, 3: 1}, {1: 2, 2: 1}, {1: 1, 2: 1, 3: 1, 4: 1},
               {1: 2, 2: 2}, {1: 4}, {1: 3, 2: 1, 3: 1}]:
        flat = []
        for v, e in sorted(md.items()):
            flat.extend([v] * e)
        seqs = set(permutations(flat))
        assert set(enumerate_words(md)) == _direct_words(seqs)


def test_count_formula_high_degree():
    # spot checks against the closed formula at total degree 7 and 8
    assert len(enumerate_words({1: 7})) == word_count({1: 7}) == 132
    assert len(enumerate_words({1: 5, 2: 3})) == word_count({1: 5, 2: 3})
    assert len(enumerate_words({1: 4, 2: 2, 3: 2})) == word_count({1: 4, 2: 2, 3: 2})
    assert len(enumerate_words({1: 2, 2: 2, 3: 2, 4: 1})) == word_count(
        {1: 2, 2: 2, 3: 2, 4: 1})


def test_canonical_order_is_strict_and_stable():
    ws = enumerate_words({1: 2, 2: 1})
    keys = [sort_key(w) for w in ws]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)
    assert ws == enumerate_words({2: 1, 1: 2})


def test_relabel_graft_replace_hole():
    w = ((1, 2), 1)
    assert relabel(w, {1: 3}) == ((3, 2), 3)
    assert relabel(w, {}) == w
    assert graft(w, {1: (5, 5), 2: 4}) == (((5, 5), 4), (5, 5))
    ctx = ((1, HOLE), 2)
    assert replace_hole(ctx, (3, 3)) == ((1, (3, 3)), 2)


def test_md_key_normalization():
    assert md_key({2: 1, 1: 3, 5: 0}) == ((1, 3), (2, 1))


def test_enumerate_rejects_nonpositive():
    with pytest.raises(ValueError):
        enumerate_words({1: -1, 2: 2})
    assert enumerate_words({}) == []


def test_shape_table_roundtrip():
    table = ShapeTable()
    for w in enumerate_words({1: 2, 2: 1, 3: 1}):
        sid, lv = table.decompose(w)
        assert table.rebuild(sid, iter(lv)) == w
