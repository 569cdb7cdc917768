import os
import subprocess
import sys

from sscat import ACTIVE_BACKEND, available_backends, catalan_number
from sscat import _pypaths
from sscat.backend import stat_histograms


def test_active_backend_is_available():
    backends = available_backends()
    assert ACTIVE_BACKEND in backends
    assert "python" in backends


def test_kernels_agree():
    for k in (2, 3, 4):
        for n in range(4):
            heights, peaks = stat_histograms(k, n)
            py_heights, py_peaks = _pypaths.stat_histograms(k, n)
            assert heights == py_heights
            assert peaks == py_peaks
            assert sum(heights.values()) == catalan_number(k, n)
            assert sum(peaks.values()) == catalan_number(k, n)


def test_zero_length_histograms():
    assert _pypaths.stat_histograms(3, 0) == ({0: 1}, {0: 1})


def test_pure_python_env_override():
    env = dict(os.environ, SSCAT_PURE_PYTHON="1")
    out = subprocess.run(
        [
            sys.executable,
            "-c",
            "import sscat; print(sscat.ACTIVE_BACKEND); "
            "print(sorted(sscat.stat_histograms(3, 2)[0].items()))",
        ],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    ).stdout.splitlines()
    assert out[0] == "python"
    assert out[1] == "[(2, 1), (4, 4)]"
