import subprocess
import sys
from typing import List

TARGETS: List[str] = ["apps", "config", "manage.py"]

result: subprocess.CompletedProcess[str] = subprocess.run(
    ["mypy", *TARGETS], capture_output=True, text=True
)

print(result.stdout)
print(result.stderr, file=sys.stderr)

sys.exit(result.returncode)
