# JSON import and export of algebras

from .algebra_format import DOCUMENT_SCHEMA, AlgebraDocument, dump, dumps, load, loads

__all__ = ["DOCUMENT_SCHEMA", "AlgebraDocument", "dump", "dumps", "load", "loads"]
