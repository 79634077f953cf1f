import json
import os
import subprocess

import pytest

import gridmagic as gm


def test_closed_form_sums():
    p = gm.closed_form_sums(gm.GridSpec([5, 3, 3]))
    assert (p.c_vertex, p.c_edge, p.c_total) == (184, 594, 1318)


def test_build_and_verify():
    spec = gm.GridSpec([5, 3])
    f, g = gm.build_labelings(spec)
    assert f.at([1, 1]) == 1 and f.at([2, 1]) == 12
    assert gm.verify_vertex_magic(spec, f).magic_sum == 32
    assert gm.verify_edge_magic(spec, g).magic_sum == 46
    r = gm.verify_supermagic(spec, gm.combine_supermagic(f, g))
    assert r.accepted() and r.magic_sum == 138 and r.vertex_range_ok


def test_canonical_spec_required():
    with pytest.raises(gm.Error):
        gm.GridSpec([3, 5])
    with pytest.raises(ValueError):
        gm.GridSpec([5, 1])
    spec, perm = gm.canonicalize([3, 5, 3])
    assert spec.dims == [5, 3, 3] and perm == [2, 1, 3]


def test_document_round_trip():
    doc = gm.generate_document([3, 5], "total")
    text = gm.save(doc)
    data = json.loads(text)
    assert data["format_version"] == "1" and data["dims"] == [3, 5]
    back = gm.load(text)
    assert gm.save(back) == text
    assert gm.verify_document(back).magic_sum == 138


def test_corrupted_document_rejected():
    data = json.loads(gm.save(gm.generate_document([5, 3], "total")))
    v = data["vertex_labels"]
    v[0], v[2] = v[2], v[0]
    r = gm.verify_document(gm.load(json.dumps(data)))
    assert not r.magic and list(r.cube_sum_values) == [136, 138, 140]


def test_search():
    r = gm.exhaustive_search(gm.GridSpec([3, 2]), "vertex", 720)
    assert r.examined == 720 and r.magic_count == 112
    assert dict(r.sum_histogram)[14] == 48
    assert gm.confirm_construction(gm.GridSpec([2, 2]), "supermagic", 576)


def test_render():
    out = gm.render(gm.generate_document([5, 3], "total"), "tikz2d")
    assert "{16} (v1-2);" in out


def test_run_cli():
    code, out, err = gm.run_cli(["predict", "--dims", "4,3"], "")
    assert code == 0 and out == "c_vertex=28 c_edge=36 c_total=112\n"
    code, gen, _ = gm.run_cli(["generate", "--dims", "4,4,2"], "")
    code, out, _ = gm.run_cli(["verify", "-"], gen)
    assert code == 0 and "MAGIC sum=" in out


@pytest.mark.skipif("GRIDMAGIC_CLI" not in os.environ, reason="CLI path not given")
def test_cli_binary_pipe():
    cli = os.environ["GRIDMAGIC_CLI"]
    gen = subprocess.run([cli, "generate", "--dims", "5,3"], capture_output=True, text=True, check=True)
    ver = subprocess.run([cli, "verify", "-"], input=gen.stdout, capture_output=True, text=True)
    assert ver.returncode == 0
    assert ver.stdout.endswith("MAGIC sum=138\n")
