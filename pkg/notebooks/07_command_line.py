# %% [markdown]
# # The command line tool
#
# `benford-gengamma` writes CSV (or JSON) that plots directly. The same entry
# point can be called in-process.

# %%
import os
import tempfile

from benford_gengamma.cli import main

# %%
main(["sample", "--a", "2", "--d", "1", "--p", "0.5", "--n", "10000", "--seed", "1"])

# %%
main(["pdf", "--d", "0.5", "--p", "0.5", "--grid", "6"])

# %%
main(["deviation", "--axis", "p", "--from", "0.5", "--to", "2", "--steps", "4",
      "--format", "json"])

# %%
# a data file plus a gnuplot script for a 3 x 3 KS grid
with tempfile.TemporaryDirectory() as tmp:
    data = os.path.join(tmp, "ks.csv")
    script = os.path.join(tmp, "ks.gp")
    main(["kstest", "--n", "1000", "--steps", "3", "--out", data, "--gnuplot", script])
    print(open(data).read())
    print(open(script).read())

# %%
# bad input gives exit status 2 and a message on stderr
print("exit status", main(["sample", "--n", "0"]))
