import pytest

from polyconj import (
    ConjugacyInstance,
    GenSpec,
    InvalidParameterError,
    SspInstance,
    decide_conjugate,
    generate,
    solve_ssp_brute,
    solve_tssp_brute,
)


class TestGenSpec:
    def test_validation(self):
        with pytest.raises(InvalidParameterError):
            GenSpec(kind="sat", n=3, bound=10, seed=0)
        with pytest.raises(InvalidParameterError):
            GenSpec(kind="ssp", n=0, bound=10, seed=0)
        with pytest.raises(InvalidParameterError):
            GenSpec(kind="ssp", n=3, bound=0, seed=0)
        with pytest.raises(InvalidParameterError):
            GenSpec(kind="ssp", n=3, bound=10, seed=2**64)


class TestGenerate:
    def test_deterministic(self):
        spec = GenSpec(kind="tssp", n=5, bound=100, seed=1, solvable=True)
        assert generate(spec) == generate(spec)

    def test_solvable_bias_tssp(self):
        inst = generate(GenSpec(kind="tssp", n=5, bound=100, seed=1, solvable=True))
        assert solve_tssp_brute(inst) is not None

    def test_solvable_bias_conj(self):
        for seed in range(20):
            inst = generate(GenSpec(kind="conj", n=3, bound=5, seed=seed, solvable=True))
            assert isinstance(inst, ConjugacyInstance)
            assert decide_conjugate(inst.ctx, inst.u, inst.v)

    def test_unbiased_ssp_shape(self):
        inst = generate(GenSpec(kind="ssp", n=3, bound=10, seed=7))
        assert isinstance(inst, SspInstance) and inst.n == 3
        assert all(abs(k) <= 10 for k in inst.coefficients)
        solve_ssp_brute(inst)  # solvability is whatever brute force says

    def test_distinct_seeds_usually_differ(self):
        a = generate(GenSpec(kind="tssp", n=6, bound=1000, seed=1))
        b = generate(GenSpec(kind="tssp", n=6, bound=1000, seed=2))
        assert a != b
