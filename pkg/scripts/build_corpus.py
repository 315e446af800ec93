"""Write the bundled corpus: one directory per manifold, one file per diagram."""

from pathlib import Path

from hennings.diagram import format_morse
from hennings.fixtures import corpus_groups

OUT = Path(__file__).resolve().parent.parent / "src" / "hennings" / "data" / "corpus"


def main():
    for group, files in corpus_groups().items():
        d = OUT / group
        d.mkdir(parents=True, exist_ok=True)
        for old in d.glob("*.morse"):
            old.unlink()
        for name, word in files.items():
            body = format_morse(word) if word.slices else ""
            (d / f"{name}.morse").write_text(f"# {group}: {name}\n" + body)
    print(f"wrote {sum(len(f) for f in corpus_groups().values())} diagrams to {OUT}")


if __name__ == "__main__":
    main()
