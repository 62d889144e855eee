import wave

import numpy as np
import pytest

import tsc
from tsc import Budget, BudgetKind, CompressedSignal, Method, Signal
from tsc.errors import FormatError, UnsupportedChannelError


def write_pcm16(path, samples, rate=8000, channels=1):
    with wave.open(str(path), "wb") as wav:
        wav.setnchannels(channels)
        wav.setsampwidth(2)
        wav.setframerate(rate)
        wav.writeframes(np.asarray(samples, dtype="<i2").tobytes())


class TestSignal:
    def test_rejects_short(self):
        with pytest.raises(ValueError):
            Signal(np.array([1.0]), 1.0)

    def test_rejects_nan_and_inf(self):
        with pytest.raises(ValueError):
            Signal(np.array([0.0, np.nan]), 1.0)
        with pytest.raises(ValueError):
            Signal(np.array([0.0, np.inf]), 1.0)

    def test_rejects_bad_rate(self):
        with pytest.raises(ValueError):
            Signal(np.array([0.0, 1.0]), 0.0)


class TestCompressedSignal:
    def test_indices_strictly_increasing(self):
        with pytest.raises(ValueError):
            CompressedSignal(np.array([0, 0]), np.array([1.0, 2.0]), 3, 1.0)

    def test_index_bound(self):
        with pytest.raises(ValueError):
            CompressedSignal(np.array([0, 5]), np.array([1.0, 2.0]), 5, 1.0, Method.RANDOM)

    def test_tsc_requires_endpoints(self):
        with pytest.raises(ValueError):
            CompressedSignal(np.array([0, 2]), np.array([1.0, 2.0]), 4, 1.0, Method.TSC)
        # fine for non-TSC methods
        CompressedSignal(np.array([0, 2]), np.array([1.0, 2.0]), 4, 1.0, Method.PAA)


class TestBudget:
    def test_fraction_range(self):
        Budget(BudgetKind.COMPRESSION_FRACTION, 0.0)
        with pytest.raises(ValueError):
            Budget(BudgetKind.COMPRESSION_FRACTION, 1.0)

    def test_points_integer_at_least_two(self):
        with pytest.raises(ValueError):
            Budget(BudgetKind.POINTS, 1)
        with pytest.raises(ValueError):
            Budget(BudgetKind.POINTS, 2.5)


class TestReadWav:
    def test_pcm16_scaling(self, tmp_path):
        path = tmp_path / "a.wav"
        write_pcm16(path, [0, 16384, -32768], rate=8000)
        sig = tsc.read_wav(path)
        assert sig.values.tolist() == [0.0, 0.5, -1.0]
        assert sig.sample_rate_hz == 8000

    def test_pcm16_positive_max(self, tmp_path):
        path = tmp_path / "a.wav"
        write_pcm16(path, [32767, 0])
        assert tsc.read_wav(path).values[0] == 32767 / 32768

    def test_fsdd_style_rate_from_header(self, tmp_path):
        # the spoken-digit corpus convention: 8 kHz mono PCM
        path = tmp_path / "6_jackson_0.wav"
        write_pcm16(path, [0, 100, -100, 50], rate=8000)
        assert tsc.read_wav(path).sample_rate_hz == 8000.0

    def test_stereo_rejected(self, tmp_path):
        path = tmp_path / "st.wav"
        write_pcm16(path, [0, 0, 1, 1], channels=2)
        with pytest.raises(UnsupportedChannelError):
            tsc.read_wav(path)

    def test_malformed_header(self, tmp_path):
        path = tmp_path / "bad.wav"
        path.write_bytes(b"RIFFgarbage-not-a-wav-file")
        with pytest.raises(FormatError):
            tsc.read_wav(path)

    def test_pcm8_unsigned_scaling(self, tmp_path):
        path = tmp_path / "u8.wav"
        with wave.open(str(path), "wb") as wav:
            wav.setnchannels(1)
            wav.setsampwidth(1)
            wav.setframerate(8000)
            wav.writeframes(bytes([128, 255, 0]))
        sig = tsc.read_wav(path)
        assert sig.values.tolist() == [0.0, 127 / 128, -1.0]

    def test_deterministic(self, tmp_path):
        path = tmp_path / "a.wav"
        write_pcm16(path, [3, -7, 11, 2])
        assert tsc.read_wav(path) == tsc.read_wav(path)


class TestCsv:
    def test_round_trip(self, tmp_path):
        path = tmp_path / "s.csv"
        sig = Signal(np.array([0.25, -1.5, 3.125]), 1.0)
        tsc.write_csv(path, sig)
        assert tsc.read_csv(path) == sig

    def test_header_skipped(self, tmp_path):
        path = tmp_path / "s.csv"
        path.write_text("value\n1.0\n2.0\n")
        assert tsc.read_csv(path).values.tolist() == [1.0, 2.0]

    def test_empty_file(self, tmp_path):
        path = tmp_path / "e.csv"
        path.write_text("")
        with pytest.raises(FormatError):
            tsc.read_csv(path)


def test_wav_write_read_cycle(tmp_path):
    sig = Signal(np.array([0.0, 0.5, -0.5, 1.0, -1.0]), 8000.0)
    path = tmp_path / "out.wav"
    tsc.write_wav(path, sig)
    back = tsc.read_wav(path)
    assert np.allclose(back.values, sig.values, atol=1 / 32767)
