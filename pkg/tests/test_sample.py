from fractions import Fraction

from scipy.stats import binom

import oracles
from basekit import catalog, engine, random_base_search
from basekit.cosets import CosetSpace


class TestRandomBaseSearch:
    def test_reproducible(self, sym4_natural):
        a = random_base_search(sym4_natural, 6, trials=2000, seed=99)
        b = random_base_search(sym4_natural, 6, trials=2000, seed=99)
        assert (a.hits, a.witness) == (b.hits, b.witness)
        c = random_base_search(sym4_natural, 6, trials=2000, seed=100)
        assert (a.hits, a.witness) != (c.hits, c.witness)

    def test_below_base_zero_hits(self, sym4_natural):
        run = random_base_search(sym4_natural, 2, trials=3000, seed=1)
        assert run.hits == 0
        assert run.witness is None

    def test_regular_action_all_hits(self):
        sp = CosetSpace.natural(catalog("cyc(5)"))
        run = random_base_search(sp, 1, trials=500, seed=5)
        assert run.hits == run.trials

    def test_exact_rate_identity(self, sym4_natural):
        # regular orbits partition the regular tuples into orbits of image size
        s = engine.reg_count(sym4_natural, 6).reg_count
        total_regular = oracles.sym_natural_regular_count(4, 6)
        assert s * sym4_natural.image_order == total_regular
        run = random_base_search(sym4_natural, 6, trials=1000, seed=3)
        assert run.epsilon_exact == Fraction(total_regular, 4**6)
        assert run.epsilon_exact >= run.epsilon_weak

    def test_rate_within_99_interval(self, sym4_natural):
        # the acceptance-grade calibration at reduced trial count
        trials = 20000
        p = 3720 / 4096
        run = random_base_search(sym4_natural, 6, trials=trials, seed=20260810)
        lo, hi = binom.ppf([0.005, 0.995], trials, p)
        assert lo <= run.hits <= hi
        assert run.rate >= float(run.epsilon_weak)

    def test_ci_brackets_rate(self, sym4_natural):
        run = random_base_search(sym4_natural, 6, trials=5000, seed=17)
        assert run.ci_low <= run.rate <= run.ci_high

    def test_witness_is_regular(self, sym4_natural):
        run = random_base_search(sym4_natural, 6, trials=200, seed=2)
        assert run.witness is not None
        assert engine.is_regular_tuple(sym4_natural, run.witness)
