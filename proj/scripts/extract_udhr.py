"""Extract plain text from the `udhr` npm package (v6) into <iso>.txt files.

usage: extract_udhr.py <udhr-package-dir> <out-dir> <code>[=<iso>] ...

<code> is the declaration file stem (e.g. hau_NG); the output file is named
after the ISO 639-3 code recorded in the declaration unless overridden.
Headings and paragraphs become one line each.
"""
import pathlib
import re
import sys
from html.parser import HTMLParser

BLOCKS = {"h1", "h2", "h3", "h4", "p", "li"}


class _Text(HTMLParser):
    def __init__(self):
        super().__init__()
        self.lines, self.buf, self.depth = [], [], 0

    def handle_starttag(self, tag, attrs):
        if tag == "title":
            self.depth += 1

    def handle_endtag(self, tag):
        if tag == "title":
            self.depth -= 1
        elif tag in BLOCKS:
            line = " ".join("".join(self.buf).split())
            if line:
                self.lines.append(line)
            self.buf = []

    def handle_data(self, data):
        if not self.depth:
            self.buf.append(data)


def main(argv):
    pkg, out = pathlib.Path(argv[1]), pathlib.Path(argv[2])
    out.mkdir(parents=True, exist_ok=True)
    for arg in argv[3:]:
        code, _, iso = arg.partition("=")
        html = (pkg / "declaration" / f"{code}.html").read_text(encoding="utf-8")
        iso = iso or re.search(r'data-iso6393="(\w+)"', html).group(1)
        parser = _Text()
        parser.feed(html)
        (out / f"{iso}.txt").write_text("\n".join(parser.lines) + "\n", encoding="utf-8")
        print(iso, len(parser.lines))


if __name__ == "__main__":
    main(sys.argv)
