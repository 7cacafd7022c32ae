"""The text format and the command line, driven in-process.

Everything the library does is reachable from flat files: definitions go
in a .hla file, and the `homkit` command checks, solves, and constructs.
This script parses the shipped fixtures, shows the canonical round trip,
and runs a few CLI commands.
"""

from pathlib import Path

from homkit.cli import main as homkit_main
from homkit.dsl import parse, serialize

FIXTURES = Path(__file__).resolve().parent / "fixtures.hla"


def run(*args):
    print(f"$ homkit {' '.join(args)}")
    code = homkit_main(list(args))
    print(f"(exit {code})")
    print()


def main():
    text = FIXTURES.read_text()
    doc = parse(text)
    print("parsed items:", [item.name for item in doc.items])

    canonical = serialize(doc)
    assert parse(canonical) == doc
    assert serialize(parse(canonical)) == canonical
    print("round trip: parse(serialize(doc)) == doc, serializer idempotent")
    print()

    run("check", str(FIXTURES), "A2leib")
    run("check", str(FIXTURES), "A2assoc")  # exit 1: the audited defect
    run("solve-rbo", str(FIXTURES), "A2assoc")
    run("solve-rbo", str(FIXTURES), "A2leib")
    run("solve-rbo", str(FIXTURES), "A2poisson")
    run("induce", str(FIXTURES), "A2leib", "--t", "T", "--verify")
    run("twist", str(FIXTURES), "A2leib", "--by", "beta", "--as", "twisted")
    run("check", str(FIXTURES), "A2poisson", "--format", "json")


if __name__ == "__main__":
    main()
