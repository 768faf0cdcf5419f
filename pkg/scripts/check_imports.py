"""Import each given package module file and report every one that fails at import time."""

import importlib
import sys
import traceback
from pathlib import Path


def module_name(path: Path) -> str:
    parts = path.with_suffix("").parts
    return ".".join(parts[:-1] if parts[-1] == "__init__" else parts)


if __name__ == "__main__":
    failed = []
    for file in sys.argv[1:]:
        name = module_name(Path(file))
        try:
            importlib.import_module(name)
        except Exception:
            failed.append(name)
            print(file)
            traceback.print_exc()
            print()

    if failed:
        print(f"{len(failed)} module(s) failed to import: {', '.join(failed)}")
    sys.exit(1 if failed else 0)
