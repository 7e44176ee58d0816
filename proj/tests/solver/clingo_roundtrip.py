"""Cross-checks emitted ASP programs against the reasoner with clingo.

For each case the answer sets, projected on the auxiliary element, must be
exactly the feasible valuations listed by `typik models`, and the verdict read
off the answer sets must match `typik entail`.
"""
import json
import subprocess
import sys
import tempfile
from pathlib import Path

import clingo

CASES = [
    ("penguin.json", "T(Bird) -> Fly >= 0.8", []),
    ("penguin.json", "T(Penguin) -> !Fly & Black > 0.5", ["--sum-weights"]),
    ("penguin.json", "T(Red) -> !Black >= 1", []),
    ("lukasiewicz.json", "T(Student) -> !Employed >= 0.5", []),
    ("lukasiewicz.json", "T(Young) -> Student >= 0.25", ["--sum-weights"]),
    ("crisp.json", "T(Cat) -> Animal >= 1", []),
    ("quoting.json", "T(Node) -> Edge_1 | node >= 0.5", []),
]


def run(typik, *args):
    return subprocess.run([typik, *args], capture_output=True, text=True)


def asp_models(program):
    ctl = clingo.Control(["0", "--project"])
    ctl.add("base", [], program + "\n#show.\n#show inst(auxc,A,V) : inst(auxc,A,V).\n"
            "#show subject(V) : auxtc(auxc,C), eval(C,auxc,V).\n#show ok/0.\n")
    ctl.ground([("base", [])])
    found = []

    def on_model(m):
        inst, subject, ok = [], None, False
        for s in m.symbols(shown=True):
            if s.name == "inst":
                inst.append((s.arguments[1], s.arguments[2].number))
            elif s.name == "subject":
                subject = s.arguments[0].number
            elif s.name == "ok":
                ok = True
        found.append((frozenset(inst), subject, ok))

    ctl.solve(on_model=on_model)
    return found


def term(name, quoted):
    if name in quoted:
        return clingo.String(name)
    return clingo.Function(name[0].lower() + name[1:])


def check(typik, fixtures, fixture, query, flags):
    kb = str(fixtures / fixture)
    with tempfile.TemporaryDirectory() as tmp:
        out = Path(tmp) / "p.lp"
        res = run(typik, "emit-asp", kb, query, "--out", str(out), *flags)
        if res.returncode != 0:
            return f"emit-asp failed: {res.stderr}"
        program = out.read_text()
    quoted = {line[len('cls("'):-len('").')] for line in program.splitlines() if line.startswith('cls("')}
    models = asp_models(program)

    listed = json.loads(run(typik, "--json", "models", kb, "--limit", "100000000").stdout)
    ours = set()
    for m in listed["models"]:
        ours.add(frozenset((term(k, quoted), int(v.split("/")[0])) for k, v in m["valuation"].items()))
    theirs = {inst for inst, _, _ in models}
    satisfiable = run(typik, "satisfiable", kb).returncode == 0
    if satisfiable and theirs != ours:
        return f"answer sets ({len(theirs)}) differ from feasible valuations ({len(ours)})"
    if not satisfiable and models:
        return "unsatisfiable KB has answer sets"

    top = max((s for _, s, _ in models), default=0)
    entailed = all(ok for _, s, ok in models if s == top) if top > 0 else True
    verdict = json.loads(run(typik, "--json", "entail", kb, query).stdout)
    if verdict["entailed"] != entailed:
        return f"solver says entailed={entailed}, reasoner says {verdict['entailed']}"
    return None


def main():
    typik, fixtures = sys.argv[1], Path(sys.argv[2])
    failed = 0
    for fixture, query, flags in CASES:
        why = check(typik, fixtures, fixture, query, flags)
        label = f"{fixture} {query} {' '.join(flags)}".strip()
        print(("ok    " if why is None else "FAIL  ") + label + ("" if why is None else ": " + why))
        failed += why is not None
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
