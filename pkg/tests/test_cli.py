from __future__ import annotations

import io
import shlex
from pathlib import Path

import pytest

from ncspec.cli import main

ROOT = Path(__file__).resolve().parent.parent
COMMANDS = sorted((ROOT / "cookbook" / "commands").glob("*.cmd"))


def run(argv):
    out = io.StringIO()
    rc = main(argv, out=out)
    return rc, out.getvalue()


@pytest.mark.parametrize("cmd", COMMANDS, ids=lambda p: p.stem)
def test_cookbook_output_is_byte_identical(cmd, monkeypatch):
    monkeypatch.chdir(ROOT)
    rc, text = run(shlex.split(cmd.read_text()))
    assert rc == 0
    assert text == cmd.with_suffix(".out").read_text()


@pytest.mark.parametrize(
    "argv",
    [
        "zeta --preset dihedral --base GF(3)[T] -D 5 --format machine",
        "dirichlet --preset s3 -N 30 --format machine",
        "points --preset dihedral --base GF(3)[T] -D 2 --format machine",
    ],
)
def test_machine_output_does_not_depend_on_jobs(argv):
    one = run(shlex.split(argv) + ["--jobs", "1"])
    two = run(shlex.split(argv) + ["--jobs", "2"])
    assert one == two and one[0] == 0


@pytest.mark.parametrize(
    "argv",
    [
        "center --preset s3",  # base Z needs a fiber
        "center --preset s3 --fiber 4",  # not prime
        "zeta --preset s3 -D 3",  # zeta series needs a finite-field base
        "dirichlet --preset dihedral -N 5",
        "neighborhood --preset s3 --localize 3 --generic --point p1",
        "neighborhood --preset s3 --localize 3 --point m9",
        "center --file /nonexistent.alg",
        "center --preset s3 --base GF(6)",
        "center --file cookbook/diag_to_mat2.alg",
    ],
)
def test_domain_errors_exit_1(argv, monkeypatch, capsys):
    monkeypatch.chdir(ROOT)
    rc, text = run(shlex.split(argv))
    assert rc == 1 and text == ""
    assert capsys.readouterr().err.startswith("error: ")


@pytest.mark.parametrize(
    "argv",
    [
        "",
        "frobnicate --preset s3",
        "center --preset nosuch",
        "center",
        "center --preset s3 --file x.alg",
        "zeta --preset dihedral -D 0",
        "zeta --preset dihedral -D x",
        "center --preset s3 --format json",
    ],
)
def test_usage_errors_exit_2(argv):
    assert run(shlex.split(argv))[0] == 2


def test_spec_machine_lines():
    rc, text = run(shlex.split("spec --preset s3 --localize 3 --generic --format machine"))
    assert rc == 0
    lines = text.splitlines()
    assert lines[:2] == ["point base=3 N=3 r=1", "point base=3 N=3 r=1"]
    assert "closure p3=m1,m2,p3" in lines
    assert [x.split()[1] for x in lines if x.startswith("generic")] == ["label=p1", "label=p2", "label=p3"]


def test_points_machine_for_z_base():
    rc, text = run(shlex.split("points --preset s3 -N 5 --format machine"))
    assert rc == 0
    assert text.splitlines() == [
        "point base=2 N=2 r=1",
        "point base=2 N=2 r=2",
        "point base=3 N=3 r=1",
        "point base=3 N=3 r=1",
        "point base=5 N=5 r=1",
        "point base=5 N=5 r=1",
        "point base=5 N=5 r=2",
    ]
