from .serializer import CsvTable
from .serializer import Serializer
from .serializer import lookup_serializer

__all__ = ["CsvTable", "Serializer", "lookup_serializer"]
