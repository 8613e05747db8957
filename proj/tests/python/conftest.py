import os
import shutil

import pytest


@pytest.fixture(scope="session")
def cli():
    path = os.environ.get("QBERN_CLI") or shutil.which("qbern")
    if not path or not os.path.exists(path):
        pytest.skip("qbern CLI not available (set QBERN_CLI)")
    return path
