# verification/fragments.py
import logging
import re
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from typing import Literal

from core.errors import CorpusError

logger = logging.getLogger("Corpus-Fragments")

AssertionKind = Literal["full", "soundness", "xor-only"]
ROLES = ("instance", "source", "reduction", "link", "target")

# A whole-line comment such as /*** Title ***/ or /* Title */
HEADER_RE = re.compile(r"^\s*/\*+\s*(?P<title>.*?)\s*\*+/\s*$")
ASSERT_RE = re.compile(r"^\s*assert\s*\(")


@dataclass
class Mutation:
    find: str
    replace: str


@dataclass
class ReductionFragments:
    """The pieces of a reduction verification program, each a list of section texts in file order."""
    instance: list[str]
    source: list[str]
    reduction: list[str]
    link: list[str]
    target: list[str]
    source_var: str
    target_var: str
    link_var: str
    legality: list[str] = field(default_factory=list)


def split_sections(text: str, titles: Sequence[str]) -> dict[str, str]:
    """
    Cuts a program at its section headers. A header starts a section when its
    title is listed in `titles` or when it is a triple-star comment; text
    before the first header is dropped. Assertions are stripped from every
    section since the final assertion is composed separately.
    """
    wanted = set(titles)
    sections: dict[str, list[str]] = {}
    current: list[str] | None = None
    for line in text.splitlines():
        match = HEADER_RE.match(line)
        if match and (match["title"] in wanted or line.lstrip().startswith("/***")):
            current = sections.setdefault(match["title"], [])
        if current is None or ASSERT_RE.match(line):
            continue
        current.append(line)

    missing = [t for t in titles if t not in sections]
    if missing:
        raise CorpusError(f"section(s) not found in program: {', '.join(missing)}")
    return {title: "\n".join(lines).rstrip() + "\n" for title, lines in sections.items()}


def fragments_from_program(text: str, sections: Mapping[str, Sequence[str]], source_var: str,
                           target_var: str, link_var: str,
                           legality: Sequence[str] = ()) -> ReductionFragments:
    """`sections` maps each role (instance, source, reduction, link, target) to its section titles."""
    unknown_roles = set(sections) - set(ROLES)
    if unknown_roles:
        raise CorpusError(f"unknown fragment role(s): {', '.join(sorted(unknown_roles))}")
    all_titles = [t for role in ROLES for t in sections.get(role, ())]
    found = split_sections(text, all_titles)
    parts = {role: [found[t] for t in sections.get(role, ())] for role in ROLES}
    return ReductionFragments(**parts, source_var=source_var, target_var=target_var,
                              link_var=link_var, legality=list(legality))


def apply_knobs(text: str, knobs: Mapping[str, int]) -> str:
    """Rewrites `name = <number>;` size assignments; every knob has to be present."""
    for name, value in knobs.items():
        pattern = re.compile(rf"^(\s*){re.escape(name)}\s*=\s*\d+\s*;", re.MULTILINE)
        text, count = pattern.subn(rf"\g<1>{name} = {int(value)};", text, count=1)
        if count == 0:
            raise CorpusError(f"scale knob '{name}' is not assigned a number in the instance")
    return text


def apply_mutations(text: str, mutations: Sequence[Mutation]) -> str:
    for mutation in mutations:
        if mutation.find not in text:
            raise CorpusError(f"mutation target not found: {mutation.find!r}")
        text = text.replace(mutation.find, mutation.replace)
    return text


def assertion_text(fragments: ReductionFragments, kind: AssertionKind) -> str:
    legality = " && ".join(fragments.legality)
    prefix = f"{legality} && " if legality else ""
    s, t, link = fragments.source_var, fragments.target_var, fragments.link_var
    match kind:
        case "full":
            body = f"{prefix}({s} ^^ {t}) && {link}"
        case "soundness":
            body = f"{prefix}!{s} && {t} && {link}"
        case "xor-only":
            body = f"{prefix}({s} ^^ {t})"
        case _:
            raise CorpusError(f"unknown assertion kind '{kind}'")
    return f"assert({body});\n"


def compose(fragments: ReductionFragments, kind: AssertionKind = "full",
            knobs: Mapping[str, int] | None = None,
            mutations: Sequence[Mutation] = ()) -> str:
    """
    Glues the fragments back together in order instance, source verifier,
    reduction, certificate link, target verifier, then the assertion of `kind`.
    Knobs only touch the instance sections; mutations apply to the whole text.
    """
    instance = "\n".join(fragments.instance)
    if knobs:
        instance = apply_knobs(instance, knobs)
    body = [instance] + [text for role in ROLES[1:] for text in getattr(fragments, role)]
    program = "\n".join(body) + "\n" + assertion_text(fragments, kind)
    program = apply_mutations(program, mutations)
    logger.debug(f"[Compose] kind={kind} knobs={dict(knobs or {})} mutations={len(mutations)}")
    return program
