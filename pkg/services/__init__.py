"""Service layer: expression parsing, I/O, run orchestration and reporting."""
