#!/usr/bin/env python3
"""Smoke test for the altcodes_py extension module.

Builds nothing itself: run `cargo build -p altcodes-py` (or `--release`)
first. The script locates the compiled cdylib, imports it, and walks the
main surface: language algebra, code classification, the strong
alt-induced decision procedure, and the embedding constructions.
"""

import shutil
import sys
import tempfile
from pathlib import Path


def load_module():
    root = Path(__file__).resolve().parent.parent
    candidates = [
        root / "target" / "release" / "libaltcodes_py.so",
        root / "target" / "debug" / "libaltcodes_py.so",
        root / "target" / "release" / "libaltcodes_py.dylib",
        root / "target" / "debug" / "libaltcodes_py.dylib",
    ]
    built = next((p for p in candidates if p.exists()), None)
    if built is None:
        sys.exit("build the extension first: cargo build -p altcodes-py")
    stage = Path(tempfile.mkdtemp(prefix="altcodes_py_"))
    shutil.copy2(built, stage / "altcodes_py.so")
    sys.path.insert(0, str(stage))
    import altcodes_py

    return altcodes_py


def main():
    m = load_module()
    Language = m.Language

    checks = 0

    def check(cond, label):
        nonlocal checks
        if not cond:
            sys.exit(f"FAILED: {label}")
        checks += 1
        print(f"  ok: {label}")

    # language algebra
    z = Language.from_words("ab", ["aab", "aaba", "baab", "baaba"])
    check(z.word_count() == 4, "four-word set materializes")
    check(z.state_count() == 7, "canonical automaton has 7 states")
    x = Language.from_words("ab", ["aa", "baa"])
    y = Language.from_words("ab", ["b", "ba"])
    check(x.concat(y) == z, "product {a², ba²}{b, ba} equals the set")
    check(z.left_quotient("aa") == y, "(aa)⁻¹Z = {b, ba}")
    check(z.right_quotient("b") == x, "Zb⁻¹ = {a², ba²}")

    # classification
    flags = m.classify(Language.from_words("ab", ["a", "ab"]))
    check(flags["code"] and not flags["prefix"] and flags["suffix"], "classify {a, ab}")
    ok, witness = m.is_code(Language.from_words("ab", ["a", "ab", "ba"]))
    check(not ok and witness[0] == "aba", "Sardinas–Patterson witness aba")

    # strong alt-induced decision
    r = m.rsic(z)
    check(r["strong_alt_induced"], "four-word set is strong alt-induced")
    check(m.verify_witness(r["x"], r["y"], z)["witness_ok"], "emitted witness verifies")
    check(m.is_strong_alternative_code(x, y), "documented pair is also a witness")

    r = m.rsic(Language.from_regex("ab", "aa*bb+aa*bbab"))
    check(not r["strong_alt_induced"], "overlap family is not strong alt-induced")
    check(
        [outcome for (_, outcome) in r["trace"]]
        == ["rejected-not-suffix-code", "rejected-not-suffix-code"],
        "both prefixes rejected by the suffix-code test",
    )

    r = m.rsic(Language.from_regex("ab", "bb*aabb*a"))
    check(
        r["strong_alt_induced"] and r["x"] == Language.from_regex("ab", "bb*a"),
        "infinite family witness X = {bⁿa}",
    )

    # embeddings
    container = m.complete_prefix(Language.from_regex("ab", "(aa)*b"))
    check(container == Language.from_regex("ab", "a*b"), "(aa)*b completes to a*b")
    done = m.complete_bifix_bounded(Language.from_words("ab", ["a"]), 1)
    check(done == Language.from_words("ab", ["a", "b"]), "{a} completes to {a, b}")
    stuck = m.complete_bifix_bounded(Language.from_words("ab", ["a", "bb"]), 6)
    check(stuck is None, "{a, bb} has no finite maximal bifix container (bound 6)")
    check(
        m.verify_bifix_container(
            Language.from_words("ab", ["a", "bb"]), Language.from_regex("ab", "a+ba*b")
        ),
        "a + ba*b is a maximal bifix container of {a, bb}",
    )
    mx, my = m.embed_strong(
        Language.from_regex("ab", "(aa)*b"),
        Language.from_regex("ab", "ab*ab"),
        "prefix",
        None,
        Language.from_regex("ab", "ba+bb+ab*a(a+b)"),
    )
    check(mx == Language.from_regex("ab", "a*b"), "embed_strong returns M_X = a*b")

    # indicator machinery
    check(m.indicator(Language.from_words("ab", ["b", "aa"]), "aab") == (2, 2), "indicator F=2, L=2")
    interp = m.interpretations(Language.from_words("ab", ["a", "bb"]), "ba")
    check(interp == [("b", ["a"], "")], "single interpretation of 'ba'")

    # rendering round-trips through the regex dialect
    kind, value, has_eps = Language.from_regex("ab", "a*b").render()
    check(kind == "regex" and not has_eps, "infinite language renders as a regex")
    check(
        Language.from_regex("ab", value) == Language.from_regex("ab", "a*b"),
        "rendered regex recompiles to the same language",
    )
    kind, value, _ = z.render()
    check(kind == "words" and value == ["aab", "aaba", "baab", "baaba"], "finite render")

    # closure under products
    xc, yc = m.product_compose(
        Language.from_words("ab", ["a", "ba"]),
        Language.from_words("ab", ["a", "bb"]),
        Language.from_words("ab", ["a", "ba"]),
        Language.from_words("ab", ["a"]),
        "prefix",
    )
    check(m.verify_witness(xc, yc)["witness_ok"], "composed witness verifies")

    print(f"smoke test passed ({checks} checks)")


if __name__ == "__main__":
    main()
