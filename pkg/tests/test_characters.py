import itertools
import os

import pytest

from wgmono.characters import (
    CharacterTable,
    build_table,
    cache_load,
    cache_store,
    default_cache_path,
    load_or_build,
    mn_character,
    verify_table,
)
from wgmono.errors import CapExceededError, DegreeMismatchError, TableVerificationError
from wgmono.exact import factorial
from wgmono.partitions import Partition, cell_stats, conjugate, lex_list
from wgmono import _mnkernel_py

try:
    from wgmono import _mnkernel_c
except ImportError:
    _mnkernel_c = None


def frobenius_character(lam, alpha):
    """Independent oracle: coefficient extraction from the alternant.

    The character is the coefficient of x^(lam + delta) in the product
    of the Vandermonde alternant with the power sums of alpha, computed
    here with dict-backed polynomials in l(lam)..d variables.
    """
    d = lam.degree
    n = d  # enough variables for any shape of degree d
    rows = list(lam.rows) + [0] * (n - lam.length)
    delta = list(range(n - 1, -1, -1))
    target = tuple(r + e for r, e in zip(rows, delta))

    def perm_sign(perm):
        sign = 1
        for i in range(len(perm)):
            for j in range(i + 1, len(perm)):
                if perm[i] > perm[j]:
                    sign = -sign
        return sign

    poly = {}
    for perm in itertools.permutations(range(n)):
        expo = tuple(delta[k] for k in perm)
        poly[expo] = poly.get(expo, 0) + perm_sign(perm)

    for k in alpha:
        nxt = {}
        for expo, coeff in poly.items():
            for var in range(n):
                bumped = list(expo)
                bumped[var] += k
                bumped = tuple(bumped)
                nxt[bumped] = nxt.get(bumped, 0) + coeff
        poly = nxt

    return poly.get(target, 0)


class TestMnCharacter:
    def test_trivial_representation(self):
        for d in range(1, 7):
            for alpha in lex_list(d):
                assert mn_character(Partition((d,)), alpha) == 1

    def test_sign_on_transposition(self):
        assert mn_character((1, 1, 1), (1, 2)) == -1

    def test_hook_on_three_cycle(self):
        assert mn_character((1, 2), (3,)) == -1

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatchError):
            mn_character((1, 2), (4,))

    @pytest.mark.parametrize("d", range(1, 6))
    def test_against_frobenius_oracle(self, d, tables):
        t = tables.get(d)
        for lam in t.order:
            for alpha in t.order:
                assert t.chi(lam, alpha) == frobenius_character(lam, alpha), \
                    f"chi({lam}, {alpha})"


class TestBuildTable:
    def test_d1(self):
        t = build_table(1)
        assert t.values == ((1,),)

    def test_d2(self):
        t = build_table(2)
        assert t.order == (Partition((1, 1)), Partition((2,)))
        assert t.row((2,)) == (1, 1)
        assert t.row((1, 1)) == (1, -1)

    def test_d3_dimension_column(self, tables):
        t = tables.get(3)
        assert [t.dimension(lam) for lam in t.order] == [1, 2, 1]

    def test_beyond_maximum(self):
        with pytest.raises(CapExceededError):
            build_table(21)
        with pytest.raises(CapExceededError):
            build_table(0)

    def test_raised_maximum_allows_more(self):
        t = build_table(21, max_degree=21)
        assert t.degree == 21 and len(t.order) == 792

    def test_repeat_builds_identical(self):
        assert build_table(9) == build_table(9)

    def test_worker_count_invariance(self):
        assert build_table(10, jobs=1) == build_table(10, jobs=3)

    @pytest.mark.parametrize("d", range(2, 11))
    def test_conjugate_sign_symmetry(self, d, tables):
        t = tables.get(d)
        for lam in t.order:
            conj_row = t.row(conjugate(lam))
            row = t.row(lam)
            for j, alpha in enumerate(t.order):
                sign = -1 if (d - alpha.length) % 2 else 1
                assert row[j] == sign * conj_row[j]

    @pytest.mark.parametrize("d", range(1, 11))
    def test_dimension_column_matches_hooks(self, d, tables):
        t = tables.get(d)
        for lam in t.order:
            assert t.dimension(lam) == factorial(d) // cell_stats(lam).hook_product


@pytest.mark.skipif(_mnkernel_c is None, reason="compiled kernel not built")
class TestKernelParity:
    @pytest.mark.parametrize("d", range(1, 13))
    def test_columns_agree(self, d):
        order = lex_list(d)
        masks = [_mnkernel_py.shape_mask(tuple(p)) for p in order]
        alphas = [tuple(p) for p in order]
        assert _mnkernel_py.compute_columns(masks, alphas) == \
            _mnkernel_c.compute_columns(masks, alphas)


class TestVerifyTable:
    def test_passes_to_d8(self, tables):
        for d in range(1, 9):
            counts = verify_table(tables.get(d))
            assert counts["row orthogonality"] > 0

    def test_perturbed_entry_caught(self, tables):
        t = tables.get(5)
        rows = [list(r) for r in t.values]
        rows[2][3] += 1
        bad = CharacterTable(5, t.order, tuple(tuple(r) for r in rows))
        with pytest.raises(TableVerificationError) as err:
            verify_table(bad)
        assert "orthogonality" in str(err.value) or "dimension" in str(err.value)

    def test_perturbed_dimension_names_shape(self, tables):
        t = tables.get(4)
        rows = [list(r) for r in t.values]
        rows[1][0] += 1
        bad = CharacterTable(4, t.order, tuple(tuple(r) for r in rows))
        with pytest.raises(TableVerificationError, match="dimension"):
            verify_table(bad)


class TestCache:
    def test_round_trip(self, tmp_path, tables):
        path = tmp_path / "t6.wgct"
        cache_store(tables.get(6), path)
        loaded = cache_load(6, path)
        assert loaded == tables.get(6)

    def test_missing_file(self, tmp_path):
        assert cache_load(7, tmp_path / "absent.wgct") is None

    def test_corrupted_checksum(self, tmp_path, tables):
        path = tmp_path / "t4.wgct"
        cache_store(tables.get(4), path)
        raw = bytearray(path.read_bytes())
        raw[-10] ^= 0x01  # flip inside the checksum hex
        path.write_bytes(bytes(raw))
        with pytest.warns(UserWarning, match="checksum"):
            assert cache_load(4, path) is None

    def test_corrupted_body(self, tmp_path, tables):
        path = tmp_path / "t4.wgct"
        cache_store(tables.get(4), path)
        raw = path.read_bytes().replace(b"degree 4", b"degree 5", 1)
        path.write_bytes(raw)
        with pytest.warns(UserWarning, match="checksum"):
            assert cache_load(4, path) is None

    def test_version_mismatch(self, tmp_path, tables):
        path = tmp_path / "t3.wgct"
        cache_store(tables.get(3), path)
        body = path.read_bytes().split(b"sha256 ")[0].replace(b"WGCT1", b"WGCT2", 1)
        import hashlib
        path.write_bytes(body + b"sha256 " +
                         hashlib.sha256(body).hexdigest().encode() + b"\n")
        with pytest.warns(UserWarning, match="magic"):
            assert cache_load(3, path) is None

    def test_truncation(self, tmp_path, tables):
        path = tmp_path / "t5.wgct"
        cache_store(tables.get(5), path)
        path.write_bytes(path.read_bytes()[:100])
        with pytest.warns(UserWarning):
            assert cache_load(5, path) is None

    def test_wrong_degree_requested(self, tmp_path, tables):
        path = tmp_path / "t5.wgct"
        cache_store(tables.get(5), path)
        with pytest.warns(UserWarning, match="degree"):
            assert cache_load(6, path) is None

    def test_default_path_disabled_without_env(self, monkeypatch):
        monkeypatch.delenv("WG_CACHE_DIR", raising=False)
        assert default_cache_path(9) is None

    def test_load_or_build_uses_cache(self, tmp_path, monkeypatch):
        monkeypatch.setenv("WG_CACHE_DIR", str(tmp_path))
        first = load_or_build(6)
        assert default_cache_path(6).exists()
        again = load_or_build(6)
        assert first == again

    def test_cache_identical_bytes_across_builds(self, tmp_path):
        a, b = tmp_path / "a.wgct", tmp_path / "b.wgct"
        cache_store(build_table(8, jobs=1), a)
        cache_store(build_table(8, jobs=2), b)
        assert a.read_bytes() == b.read_bytes()


class TestPureKernelPath:
    def test_env_forces_fallback(self, monkeypatch):
        monkeypatch.setenv("WG_PURE_PYTHON", "1")
        from wgmono.characters import active_kernel
        assert active_kernel(5) is _mnkernel_py
        t = build_table(5)
        verify_table(t)
