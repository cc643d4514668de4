import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from skewalg.config import Config


@pytest.fixture
def config(tmp_path):
    return Config(certificate_directory=str(tmp_path / "certs"))
