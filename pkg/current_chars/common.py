""" Common variables and functions. """
import json
import pathlib

from current_chars.exceptions import CurrentCharsException


def _key_order(key: str):
    # Integer keys (exponents of u) in numeric order, before any other key
    try:
        return (0, int(key), '')
    except ValueError:
        return (1, 0, key)


def _ordered(document):
    if isinstance(document, dict):
        return {
            key: _ordered(document[key])
            for key in sorted(document, key=lambda k: _key_order(str(k)))
        }
    if isinstance(document, (list, tuple)):
        return [_ordered(item) for item in document]
    return document


def canonical_json(document) -> str:
    """
    Dump a JSON document in the canonical form used by every command:
    sorted keys, integer keys in numeric order, fixed separators and a
    trailing newline. Two runs on the same inputs produce byte-identical
    output.
    """
    return json.dumps(_ordered(document), indent=2, separators=(',', ': ')) + '\n'


def create_local_directory(dirpath: pathlib.Path):
    """
    Helper function used to create a directory locally.

    Attributes:
        dirpath:
            `pathlib.Path` directory path.
    """
    if dirpath.exists():
        return False

    try:
        dirpath.mkdir(parents=True)
    except OSError as error:
        raise CurrentCharsException(
            f'Directory was not created: {dirpath}. Exception '
            f'occured ({error.__class__.__name__}): {error}'
        )

    return True


def write_document(filepath: pathlib.Path, document) -> pathlib.Path:
    """
    Write a canonical JSON document to `filepath`, creating the parent
    directory if needed.

    Raises:
        CurrentCharsException
    """
    create_local_directory(filepath.parent)
    try:
        filepath.write_text(canonical_json(document))
    except OSError as error:
        raise CurrentCharsException(
            f'Document was not written: {filepath}. Exception '
            f'occured ({error.__class__.__name__}): {error}'
        )
    return filepath
