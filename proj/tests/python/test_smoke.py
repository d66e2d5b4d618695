"""Smoke tests for the python bindings. Runnable directly or under pytest."""

import heptad


def test_spectrum():
    assert heptad.spectrum(30) == [7, 8, 14, 15, 21, 22, 28, 29]
    assert all(v % 7 in (0, 1) for v in heptad.spectrum(210))


def test_classes():
    cs = heptad.classes()
    assert len(cs) == 10
    byname = {c["name"]: c for c in cs}
    assert byname["D8"]["reverse"] == "D9"
    assert byname["D9"]["reverse"] == "D8"
    fixed = [c["name"] for c in cs if c["reverse"] == c["name"]]
    assert fixed == ["D1", "D2", "D3", "D4", "D5", "D6", "D7", "D10"]
    assert len({c["word"] for c in cs}) == 10


def test_generate_verify_roundtrip():
    cert = heptad.generate(21, "D4")
    ok, message = heptad.verify(cert)
    assert ok, message
    assert message.startswith("OK: 60 blocks")

    cert_json = heptad.generate(14, "D10", format="json")
    ok, _ = heptad.verify(cert_json)
    assert ok


def test_verify_rejects_tampering():
    cert = heptad.generate(14, "D6")
    lines = cert.strip().split("\n")
    dropped = "\n".join(lines[:-1]) + "\n"
    ok, message = heptad.verify(dropped)
    assert not ok
    assert "missing" in message


def test_plan_tree():
    tree = heptad.plan_tree(42, "D8")
    assert tree["step"] == "pairs_plus_skeleton"
    assert len(tree["children"]) == 4


def test_inadmissible_raises():
    try:
        heptad.generate(10, "D1")
    except ValueError as e:
        assert "mod 7" in str(e)
    else:
        raise AssertionError("generate(10) should be rejected")


def test_fixtures_listing():
    fx = heptad.fixtures()
    assert any(f["host"] == "Kstar(14)" and f["cls"] == "D3" for f in fx)
    assert all(len(f["sha256"]) == 64 for f in fx)


if __name__ == "__main__":
    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
                print(f"ok   {name}")
            except AssertionError as e:
                print(f"FAIL {name}: {e}")
                failures += 1
    raise SystemExit(1 if failures else 0)
