#!/usr/bin/env python3
"""Build the single-file ``thinness-lab`` executable.

Steps: install requirements, run the fast test suite (``-m "not slow"``),
wipe old artifacts, then run PyInstaller on ``thinness-lab.spec``.
"""
import platform
import shutil
import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent
SPEC_FILE = 'thinness-lab.spec'
STEPS = 4


def _step(index: int, title: str) -> None:
    print(f"\n[{index}/{STEPS}] {title}")


def _run(*args: str) -> int:
    return subprocess.run([sys.executable, '-m', *args], cwd=ROOT).returncode


def _fail(message: str) -> None:
    print(f"\n{message}")
    sys.exit(1)


def main() -> None:
    banner = '=' * 50
    print(banner)
    print("Thinness Lab build")
    print(banner)

    if sys.version_info < (3, 10):
        _fail("Python 3.10 or newer is required")
    print(f"Python {platform.python_version()} on {platform.system()}")

    _step(1, "Installing requirements")
    if _run('pip', 'install', '-q', '-r', 'requirements.txt') != 0:
        _fail("Dependency install failed")

    _step(2, "Running fast tests")
    if _run('pytest', '-q', '-m', 'not slow') != 0:
        _fail("Tests failed, not building")

    _step(3, "Removing build/ and dist/")
    for name in ('build', 'dist'):
        shutil.rmtree(ROOT / name, ignore_errors=True)

    _step(4, "Running PyInstaller")
    if _run('PyInstaller', '--clean', '--noconfirm', SPEC_FILE) != 0:
        _fail("PyInstaller failed")

    binary = ROOT / 'dist' / ('thinness-lab.exe' if platform.system() == 'Windows' else 'thinness-lab')
    if not binary.exists():
        _fail(f"PyInstaller finished but {binary} is missing")
    print(f"\n{banner}\nBuilt {binary} ({binary.stat().st_size / 2 ** 20:.1f} MB)\n{banner}")


if __name__ == '__main__':
    main()
