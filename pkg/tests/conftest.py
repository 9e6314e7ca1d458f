from __future__ import annotations

import os
import subprocess
import sys

import pytest


@pytest.fixture
def run_cli(tmp_path):
    """Run the installed CLI in a subprocess, defaulting to a scratch cwd."""

    def _run(*args: str, env: dict[str, str] | None = None, cwd=None):
        full_env = {**os.environ, **(env or {})}
        return subprocess.run(
            [sys.executable, "-m", "qwl", *args],
            capture_output=True,
            text=True,
            env=full_env,
            cwd=cwd or tmp_path,
        )

    return _run
