import pytest

from tsc.synthetic import write_corpus


@pytest.fixture(scope="session")
def corpus_dir(tmp_path_factory):
    """50 synthetic spoken-digit-like WAV files at 8 kHz."""
    directory = tmp_path_factory.mktemp("corpus")
    write_corpus(directory, n_signals=50, seed=7, length=1500)
    return directory
