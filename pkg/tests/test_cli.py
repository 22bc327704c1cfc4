import pytest

from stabcat import docfmt
from stabcat.cli import INPUT_ERROR, NEGATIVE, OK, VERIFY_FAILED, main
from stabcat.endo import EndoObj
from stabcat.preord import discrete
from stabcat.stable import PartialMor


def write(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def doc(tmp_path, name, payload):
    path = tmp_path / name
    docfmt.dump(docfmt.as_document(payload), path)
    return str(path)


ENDO5 = "stabcat/1 endo\nn = 5\nf = 1 2 0 3 3\n"
CYCLE_PT = EndoObj(3, (1, 0, 2))


def test_canon_prints_the_cyclic_part(tmp_path, capsys):
    assert main(["canon", write(tmp_path, "x", ENDO5)]) == OK
    out = capsys.readouterr().out
    assert "eps  = [0, 1, 2, 3]" in out and "[PASS]" in out


def test_canon_of_discrete_object_is_identity(tmp_path, capsys):
    assert main(["canon", doc(tmp_path, "d", discrete(3))]) == OK
    out = capsys.readouterr().out
    assert "eps  = [0, 1, 2]" in out and "eta  = [0, 1, 2]" in out


def test_canon_dot_output(tmp_path, capsys):
    assert main(["--format", "dot", "canon", write(tmp_path, "x", ENDO5)]) == OK
    assert capsys.readouterr().out.startswith("digraph sequence {")


def test_malformed_file_exits_one_with_location(tmp_path, capsys):
    path = write(tmp_path, "bad", "stabcat/1 endo\nn = 2\nf = 0 7\n")
    assert main(["canon", path]) == INPUT_ERROR
    assert f"{path}:3:5:" in capsys.readouterr().err


def test_missing_file_and_wrong_kind_exit_one(tmp_path, capsys):
    assert main(["canon", str(tmp_path / "nope")]) == INPUT_ERROR
    p = PartialMor.from_padded(CYCLE_PT, CYCLE_PT, [0, 1, 2])
    assert main(["canon", doc(tmp_path, "p", p)]) == INPUT_ERROR


def test_unknown_verb_exits_one():
    with pytest.raises(SystemExit) as info:
        main(["frobnicate"])
    assert info.value.code == INPUT_ERROR


def test_stable_eq_verdicts(tmp_path, capsys):
    p = doc(tmp_path, "p", PartialMor.from_padded(CYCLE_PT, CYCLE_PT, [0, 1, 2]))
    r = doc(tmp_path, "r", PartialMor.from_padded(CYCLE_PT, CYCLE_PT, [0, 1, None]))
    s = doc(tmp_path, "s", PartialMor.from_padded(CYCLE_PT, CYCLE_PT, [1, 0, None]))
    assert main(["stable-eq", p, r]) == OK
    assert capsys.readouterr().out.startswith("true")
    assert main(["stable-eq", p, p]) == OK
    assert "C   = [0, 1, 2]" in capsys.readouterr().out
    assert main(["stable-eq", p, s]) == NEGATIVE
    assert capsys.readouterr().out.strip() == "false"


def test_stable_eq_rejects_non_parallel(tmp_path):
    p = doc(tmp_path, "p", PartialMor.from_padded(CYCLE_PT, CYCLE_PT, [0, 1, 2]))
    other = EndoObj(1, (0,))
    q = doc(tmp_path, "q", PartialMor.from_padded(other, CYCLE_PT, [2]))
    assert main(["stable-eq", p, q]) == INPUT_ERROR


def test_compose_second_after_first(tmp_path, capsys):
    swap = doc(tmp_path, "s", PartialMor.from_padded(CYCLE_PT, CYCLE_PT, [1, 0, None]))
    assert main(["compose", swap, swap]) == OK
    out = docfmt.parse(capsys.readouterr().out).payload
    assert out.padded == (0, 1, None)


def test_kernel_and_cokernel_verbs(tmp_path, capsys):
    from stabcat.category import Mor
    f = Mor(CYCLE_PT, EndoObj(1, (0,)), [0, 0, 0])
    path = doc(tmp_path, "f", f)
    assert main(["kernel", path]) == OK
    out = capsys.readouterr().out
    assert docfmt.parse(out.split("#")[0]).payload.dom == CYCLE_PT and "[PASS] z-kernel" in out
    assert main(["cokernel", path]) == OK
    assert "[PASS] z-cokernel" in capsys.readouterr().out
    s = doc(tmp_path, "s", PartialMor.from_padded(CYCLE_PT, CYCLE_PT, [1, 0, None]))
    assert main(["kernel", s]) == OK
    assert "[PASS] stable kernel" in capsys.readouterr().out


def test_verify_unknown_suite_exits_one():
    assert main(["verify", "nope"]) == INPUT_ERROR


def test_verify_is_reproducible_per_seed(capsys):
    assert main(["--max-n", "2", "verify", "stable", "--seed", "7"]) == OK
    first = capsys.readouterr().out
    assert main(["--max-n", "2", "verify", "stable", "--seed", "7"]) == OK
    second = capsys.readouterr().out
    strip = lambda s: [l.rsplit(",", 1)[0] for l in s.splitlines()]
    assert strip(first) == strip(second)


def test_corrupted_suite_exits_nonzero(capsys):
    assert main(["verify", "exact", "--corrupt", "--max-n", "2"]) == VERIFY_FAILED
    assert "FAIL" in capsys.readouterr().out


def test_export_dot_verbs(tmp_path, capsys):
    path = write(tmp_path, "x", ENDO5)
    assert main(["export-dot", path]) == OK
    assert capsys.readouterr().out.startswith("digraph X {")
    assert main(["export-dot", "--what", "hasse", path]) == INPUT_ERROR


def test_universal_small_fragment_and_target_check(tmp_path, capsys):
    out = tmp_path / "stab.txt"
    assert main(["--max-n", "2", "universal", "--category", "preord", "--functor", "sigma",
                 "--export", str(out)]) == OK
    assert "[PASS] induced H, G=sigma" in capsys.readouterr().out
    assert main(["universal", "--target", str(out)]) == OK
    # The last object of the fragment is a two-point chain, not a zero object.
    text = out.read_text()
    last = int(text.split("objects = ")[1].split()[0]) - 1
    text = text.replace("zero = 0", f"zero = {last}", 1)
    assert main(["universal", "--target", write(tmp_path, "bad", text)]) == VERIFY_FAILED
