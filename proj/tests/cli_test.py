"""End-to-end checks of the weylsys CLI: exit codes, schema validity, CSV layout, determinism."""

import json
import math
import os
import subprocess
import sys
import tempfile

import jsonschema

CLI = sys.argv[1]
SCHEMA = json.load(open(sys.argv[2]))
failures = []


def run(*args):
    p = subprocess.run([CLI, *args], capture_output=True, text=True)
    return p.returncode, p.stdout, p.stderr


def check(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def valid(doc):
    try:
        jsonschema.validate(doc, SCHEMA)
        return True
    except jsonschema.ValidationError as e:
        print("     schema:", e.message)
        return False


def cplx(d):
    return complex(float(d["re"]), float(d["im"]))


code, out, _ = run("eval-m", "--potential", "bessel:1.5", "--z", "0+1i")
doc = json.loads(out)
check(code == 0 and valid(doc), "eval-m bessel json")
check(abs(cplx(doc["rows"][0]["m"]) - (1.2071067811865475 - 0.5j)) < 1e-12, "eval-m bessel m(i)")

code, out, _ = run("eval-m", "--potential", "free:0", "--z", "0+2i", "--format", "csv")
lines = out.splitlines()
check(code == 0 and lines[0] == "z,m,err" and lines[1].startswith("0+2i,1-1i,"), "eval-m free csv m(2i) = 1-i")

code, _, err = run("eval-m", "--potential", "bessel:1.5", "--z", "4+0i")
check(code == 2 and "OnSpectrum" in err, "eval-m on the spectrum exits 2")

code, out, _ = run("eval-m", "--mode", "engine", "--z", "-1", "--z", "1+1i")
doc = json.loads(out)
check(code == 0 and valid(doc) and doc["mode"] == "engine", "eval-m engine mode")

code, out, _ = run("eval-malpha", "--tan-alpha", "inf", "--z", "0+1i")
doc = json.loads(out)
check(code == 0 and valid(doc), "eval-malpha json")
check(abs(cplx(doc["rows"][0]["neg_m_alpha"]) - (0.7071067811865475 + 0.2928932188134525j)) < 1e-12,
      "eval-malpha alpha = pi/2 gives 1/m")

code, out, _ = run("realize", "--target", "neg-m-alpha", "--tan-alpha", "-1", "--z", "0+1i")
doc = json.loads(out)
check(code == 0 and valid(doc) and doc["mu"] == -1.0 and doc["xi"] == 1.0, "realize tan alpha = -1")
code, out, _ = run("realize", "--target", "recip-m")
doc = json.loads(out)
check(code == 0 and valid(doc) and doc["mu"] == "inf", "realize 1/m has mu = inf")
code, _, _ = run("realize", "--target", "neg-m-alpha")
check(code == 1, "realize neg-m-alpha without alpha is a usage error")

code, out, _ = run("classify", "--alpha", "-0.7853981634", "--potential", "bessel:1.5")
doc = json.loads(out)
check(code == 0 and valid(doc) and doc["lsystem_class"] == "accumulative_sectorial", "classify alpha = -pi/4")
check(doc["angles"]["beta1"]["radians"] == 0 and abs(doc["angles"]["beta2"]["radians"] - math.pi / 4) < 1e-9,
      "classify alpha = -pi/4 angles")
code, out, _ = run("classify", "--mu", "inf", "--h", "0+1i")
doc = json.loads(out)
check(code == 0 and valid(doc) and doc["lsystem_class"] == "accretive", "classify mu = inf is accretive")
code, out, _ = run("classify", "--alpha", "0")
doc = json.loads(out)
check(code == 0 and valid(doc) and doc["lsystem_class"] == "accumulative_extremal", "classify alpha = 0 is extremal")
check(doc["angles"]["beta2"]["tan"] == "inf" and doc["angles"]["beta_class"] is None, "extremal angles")
code, _, _ = run("classify", "--alpha", "0", "--mu", "1", "--h", "0+1i")
check(code == 1, "classify with both alpha and mu is a usage error")

code, out, _ = run("region-scan", "--n", "64", "--format", "csv")
rows = [l.split(",") for l in out.splitlines()]
check(code == 0 and rows[0] == ["alpha", "tan_alpha", "class", "beta1", "beta2", "beta_class", "beta_universal"],
      "region-scan header")
acc = [float(r[1]) for r in rows[1:] if r[2] == "accretive"]
accum = [float(r[1]) for r in rows[1:] if r[2].startswith("accumulative")]
check(min(acc) == 0.99999999999999989 and abs(min(accum) + 1) < 1e-12 and max(accum) == 0, "region-scan boundaries")
code, out, _ = run("region-scan", "--n", "16")
check(code == 0 and valid(json.loads(out)), "region-scan json")
code, out, _ = run("region-scan", "--n", "0", "--format", "csv")
check(code == 0 and out == "alpha,tan_alpha,class,beta1,beta2,beta_class,beta_universal\n", "empty region scan")
code, out, _ = run("region-scan", "--n", "64", "--potential", "free:0", "--format", "csv")
accum = [r for r in out.splitlines()[1:] if "accumulative" in r]
check(code == 0 and len(accum) == 1 and accum[0].startswith("0,0,"), "free potential accumulative region is tan alpha = 0")

code, out, _ = run("measure", "--t-min", "0.1", "--t-max", "10", "--points", "21", "--format", "csv")
lines = out.splitlines()
head = json.loads(lines[0][2:])
check(code == 0 and lines[0].startswith("# ") and lines[1] == "t,density,cumulative", "measure csv layout")
dens = {round(float(l.split(",")[0]), 12): float(l.split(",")[1]) for l in lines[2:]}
check(abs(dens[1.0] - 0.15915494309189535) < 1e-4 and abs(head["gamma"] + 1) < 1e-3, "measure density(1) and gamma")
code, out, _ = run("measure", "--potential", "free:0", "--points", "5")
doc = json.loads(out)
check(code == 0 and valid(doc), "measure json")
check(all(abs(r["density"] - math.sqrt(r["t"]) / math.pi) < 1e-3 * r["density"] for r in doc["rows"]),
      "free measure density sqrt(t)/pi")
code, _, _ = run("measure", "--t-min", "2", "--t-max", "1")
check(code == 1, "empty t range is a usage error")
code, _, err = run("measure", "--tan-alpha", "0.5")
check(code == 2 and "NotInverseStieltjes" in err, "measure of a non inverse Stieltjes function exits 2")

code, _, _ = run("verify", "--potential", "nope:1")
check(code == 1, "unknown potential spec exits 1")
code, _, _ = run("eval-m", "--potential", "bessel", "--z", "i")
check(code == 1, "malformed potential spec exits 1")
code, _, _ = run("eval-m", "--z", "one")
check(code == 1, "malformed complex exits 1")
code, _, _ = run("nope")
check(code == 1, "unknown command exits 1")
code, out, _ = run("verify", "--xmax", "5")
doc = json.loads(out)
check(code == 3 and valid(doc) and not next(c for c in doc["criteria"] if c["id"] == "1")["pass"],
      "verify with xmax 5 fails the engine check and exits 3")

with tempfile.TemporaryDirectory() as d:
    path = os.path.join(d, "q.csv")
    with open(path, "w") as f:
        f.write("x,q\n1,0\n2,0\n")
    code, out, _ = run("eval-m", "--potential", "table:" + path, "--z", "0+2i")
    doc = json.loads(out)
    check(code == 0 and valid(doc) and abs(cplx(doc["rows"][0]["m"]) - (1 - 1j)) < 1e-6, "table potential q = 0")
    code, _, _ = run("eval-m", "--potential", "table:" + os.path.join(d, "missing.csv"), "--z", "i")
    check(code == 2, "missing table file exits 2")
    target = os.path.join(d, "scan.csv")
    code, out, _ = run("region-scan", "--format", "csv", "--out", target)
    check(code == 0 and out == "" and open(target).read().startswith("alpha,"), "--out writes the file")

for args in (["verify", "--seed", "7"], ["region-scan", "--n", "33"], ["eval-m", "--mode", "engine", "--z", "1+1i"]):
    a, b = run(*args), run(*args)
    check(a == b, "deterministic: " + " ".join(args))

print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
