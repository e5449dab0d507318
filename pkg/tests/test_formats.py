import pytest

from polyconj import (
    CertificateFile,
    ConjugacyInstance,
    GenSpec,
    InstanceParseError,
    SolutionFile,
    SspInstance,
    TsspInstance,
    generate,
    make_context,
    parse_instance,
    serialize_instance,
)
from polyconj.conjugacy import Certificate


class TestParse:
    def test_ssp(self):
        assert parse_instance("ssp\n3\n3 5 7\n8\n") == SspInstance((3, 5, 7), 8)

    def test_conj(self):
        parsed = parse_instance("conj\n1\n0 0 5\n-5 0 5\n")
        assert parsed == ConjugacyInstance(make_context(1), (0, 0, 5), (-5, 0, 5))

    def test_cert_and_sol(self):
        parsed = parse_instance("cert\n2\n0 1 0 1 0\n")
        assert parsed == CertificateFile(make_context(2), Certificate((0, 1, 0, 1, 0)))
        assert parse_instance("sol\n3\n1 0 -1\n") == SolutionFile((1, 0, -1))

    def test_comments_and_blank_lines(self):
        text = "# header\n\nssp\n# size\n2\n  3   5\n8\n\n# trailing\n"
        assert parse_instance(text) == SspInstance((3, 5), 8)

    def test_arbitrary_precision(self):
        big = 10**40
        parsed = parse_instance(f"tssp\n2\n{big} -{big}\n{big}\n")
        assert parsed == TsspInstance((big, -big), big)


class TestParseErrors:
    def test_missing_target_row(self):
        with pytest.raises(InstanceParseError) as err:
            parse_instance("ssp\n2\n3 5\n")
        assert "target" in str(err.value)

    def test_unknown_kind(self):
        with pytest.raises(InstanceParseError) as err:
            parse_instance("knapsack\n2\n3 5\n8\n")
        assert err.value.line == 1 and err.value.column == 1

    def test_non_integer_token_location(self):
        with pytest.raises(InstanceParseError) as err:
            parse_instance("ssp\n2\n3 x\n8\n")
        assert err.value.line == 3 and err.value.column == 3

    def test_wrong_arity(self):
        with pytest.raises(InstanceParseError):
            parse_instance("ssp\n3\n3 5\n8\n")
        with pytest.raises(InstanceParseError):
            parse_instance("ssp\n1\n3 5\n8\n")

    def test_extra_content(self):
        with pytest.raises(InstanceParseError):
            parse_instance("ssp\n2\n3 5\n8\n9\n")

    def test_bad_size(self):
        with pytest.raises(InstanceParseError):
            parse_instance("ssp\n0\n\n0\n")

    def test_sol_domain(self):
        with pytest.raises(InstanceParseError):
            parse_instance("sol\n2\n1 2\n")

    def test_underscores_rejected(self):
        with pytest.raises(InstanceParseError):
            parse_instance("ssp\n1\n1_0\n8\n")

    def test_empty_document(self):
        with pytest.raises(InstanceParseError):
            parse_instance("")


class TestRoundTrip:
    def test_generated_corpus(self):
        # parse(serialize(x)) == x across a generated corpus of every kind
        for kind in ("ssp", "sspp", "tssp", "conj"):
            for seed in range(1000):
                inst = generate(
                    GenSpec(kind=kind, n=1 + seed % 7, bound=50, seed=seed, solvable=seed % 2 == 0)
                )
                assert parse_instance(serialize_instance(inst)) == inst

    def test_cert_and_sol_round_trip(self):
        for n in (1, 2, 5):
            ctx = make_context(n)
            w = tuple(range(-n, n + 1))
            doc = CertificateFile(ctx, Certificate(w))
            assert parse_instance(serialize_instance(doc)) == doc
        sol = SolutionFile((1, 0, -1, 1))
        assert parse_instance(serialize_instance(sol)) == sol

    def test_serializer_rejects_unknown(self):
        with pytest.raises(TypeError):
            serialize_instance({"kind": "ssp"})
