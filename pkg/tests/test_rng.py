from hypothesis import given, strategies as st

from copkit.rng import MASK64, SplitMix64, u64_stream, uniform_stream


def test_reference_vector():
    # published SplitMix64 outputs for seed 1234567
    g = SplitMix64(1234567)
    assert [g.next_u64() for _ in range(5)] == [
        6457827717110365317, 3203168211198807973, 9817491932198370423,
        4593380528125082431, 16408922859458223821,
    ]


@given(st.integers(0, MASK64), st.integers(0, 50), st.integers(1, 20))
def test_vectorised_stream_matches_scalar(seed, start, count):
    g = SplitMix64(seed)
    for _ in range(start):
        g.next_u64()
    expected = [g.next_u64() for _ in range(count)]
    assert [int(x) for x in u64_stream(seed, count, start)] == expected


@given(st.integers(0, MASK64))
def test_uniform_in_unit_interval(seed):
    u = uniform_stream(seed, 64)
    assert ((u >= 0) & (u < 1)).all()
    g = SplitMix64(seed)
    assert u[0] == g.next_float()


def test_negative_seed_wraps():
    assert list(u64_stream(-1, 3)) == list(u64_stream(MASK64, 3))
