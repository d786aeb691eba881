"""MODS XML parsing into a plain element tree.

Namespace-aware: elements in the MODS namespace and unqualified elements are
treated alike, xml:lang and xlink:href attributes are kept under readable
keys, and unknown elements stay in the tree marked unrecognized so mapping
can report them.
"""

from __future__ import annotations

import xml.etree.ElementTree as ET
from dataclasses import dataclass
from typing import Iterator

MODS_NS = "http://www.loc.gov/mods/v3"
XML_NS = "http://www.w3.org/XML/1998/namespace"
XLINK_NS = "http://www.w3.org/1999/xlink"

_ATTR_ALIASES = {
    f"{{{XML_NS}}}lang": "xml:lang",
    f"{{{XLINK_NS}}}href": "xlink:href",
}

RECOGNIZED_ELEMENTS = frozenset(
    {
        "mods",
        "modsCollection",
        "abstract",
        "accessCondition",
        "affiliation",
        "classification",
        "copyrightDate",
        "dateCaptured",
        "dateCreated",
        "dateIssued",
        "dateModified",
        "dateOther",
        "dateValid",
        "description",
        "displayForm",
        "edition",
        "extension",
        "extent",
        "form",
        "frequency",
        "genre",
        "geographic",
        "identifier",
        "issuance",
        "language",
        "languageTerm",
        "location",
        "name",
        "nameIdentifier",
        "namePart",
        "nonSort",
        "note",
        "originInfo",
        "part",
        "partName",
        "partNumber",
        "physicalDescription",
        "place",
        "placeTerm",
        "publisher",
        "recordChangeDate",
        "recordCreationDate",
        "recordIdentifier",
        "recordInfo",
        "recordOrigin",
        "relatedItem",
        "role",
        "roleTerm",
        "scriptTerm",
        "subTitle",
        "subject",
        "tableOfContents",
        "targetAudience",
        "temporal",
        "title",
        "titleInfo",
        "topic",
        "typeOfResource",
        "url",
    }
)


class ModsParseError(ValueError):
    """Malformed XML or a document that is not a MODS record."""


class ModsStructureError(ModsParseError):
    """Well-formed XML whose root is not mods or modsCollection."""


@dataclass(frozen=True)
class ModsElement:
    """One element: local tag, namespace, attributes, text, children."""

    tag: str
    ns: str
    attrs: dict
    text: str
    children: tuple
    recognized: bool

    def find_all(self, tag: str) -> list["ModsElement"]:
        return [child for child in self.children if child.tag == tag]

    def iter_tree(self) -> Iterator["ModsElement"]:
        yield self
        for child in self.children:
            yield from child.iter_tree()


@dataclass(frozen=True)
class ModsDocument:
    root: ModsElement
    source: str

    def records(self) -> list[ModsElement]:
        """The mods record elements: the root itself or collection members."""
        if self.root.tag == "mods":
            return [self.root]
        return self.root.find_all("mods")

    def element_count(self) -> int:
        return sum(1 for _ in self.root.iter_tree())


def _split_tag(raw: str) -> tuple[str, str]:
    if raw.startswith("{"):
        ns, _, local = raw[1:].partition("}")
        return local, ns
    return raw, ""


def _convert(node: ET.Element) -> ModsElement:
    local, ns = _split_tag(node.tag)
    attrs = {}
    for key, value in node.attrib.items():
        attrs[_ATTR_ALIASES.get(key, key)] = value
    text = (node.text or "").strip()
    children = tuple(_convert(child) for child in node)
    recognized = ns in ("", MODS_NS) and local in RECOGNIZED_ELEMENTS
    return ModsElement(
        tag=local, ns=ns, attrs=attrs, text=text, children=children, recognized=recognized
    )


def parse_mods_xml(data, source: str = "") -> ModsDocument:
    """Parse bytes or text into a ModsDocument.

    Raises ModsParseError with line and column for malformed XML and
    ModsStructureError when the root is not a record or collection.
    """
    if isinstance(data, str):
        data = data.encode("utf-8")
    try:
        root = ET.fromstring(data)
    except ET.ParseError as exc:
        line, column = exc.position
        raise ModsParseError(
            f"{source or 'input'}: malformed XML at line {line}, column {column}: {exc.msg}"
        ) from exc
    converted = _convert(root)
    if converted.tag not in ("mods", "modsCollection") or converted.ns not in ("", MODS_NS):
        raise ModsStructureError(
            f"{source or 'input'}: root element must be mods or modsCollection, "
            f"got {converted.tag!r}"
        )
    return ModsDocument(root=converted, source=source)
