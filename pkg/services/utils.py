# services/utils.py
import re

# /*** Title ***/, /* Title */ or // Title
_COMMENT_TITLE_RE = re.compile(r"^\s*(?:/\*+\s*(?P<block>.*?)\s*\*+/|//\s*(?P<line>.*\S))\s*$")


# Helper function to extract a clean title from a program
def get_smart_title(text: str, max_length: int = 60) -> str:
    """
    Extracts a summary title for a stored run: the first one-line comment of
    the program, or its first non-empty line.
    """
    if not text or not text.strip():
        return "Untitled program"

    # 1. Prefer the first heading comment
    title = ""
    for line in text.splitlines():
        match = _COMMENT_TITLE_RE.match(line)
        if match:
            title = (match["block"] or match["line"] or "").strip()
            if title:
                break

    # 2. Otherwise the first line of code
    if not title:
        title = next(line.strip() for line in text.splitlines() if line.strip())

    if len(title) > max_length:
        title = title[:max_length - 3].strip() + "..."

    return title
