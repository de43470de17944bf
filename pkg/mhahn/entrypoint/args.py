from dargs import (
    Argument,
)

from mhahn.constants import (
    default_module_cutoff,
)


def lattice_params_args():
    doc_even = 'Explicit (alpha, beta) pairs used for every even N, e.g. [["21/2", "23/2"]]. Pairs outside the positivity regime of an N are skipped.'
    doc_odd = 'Explicit (alpha, beta) pairs used for every odd N, e.g. [["3", "2"]].'
    return [
        Argument("even", list, optional=True, default=None, doc=doc_even),
        Argument("odd", list, optional=True, default=None, doc=doc_odd),
    ]


def sweep_args():
    doc_n_max = "The largest N of the algebra, dual representation and tilde cells."
    doc_n_max_poly = (
        "The largest N of the orthogonality and hypergeometric representation cells."
    )
    doc_n_max_kappa = "The largest N of the coupled operator and Clebsch-Gordan cells."
    doc_mu_values = "The module parameters mu_a and mu_b, as rational strings."
    doc_cutoff = "The truncation of the module sanity checks."
    doc_gauges = "The number of random free-parameter sequences per dual representation cell, in addition to the unit one."
    doc_random_points = "The number of random off-grid rationals per hypergeometric representation cell."
    doc_seed = "The seed of the random gauges and points."
    doc_params = "Explicit parameter pairs replacing the default lattice."

    return [
        Argument("n_max", int, optional=True, default=9, doc=doc_n_max),
        Argument("n_max_poly", int, optional=True, default=12, doc=doc_n_max_poly),
        Argument("n_max_kappa", int, optional=True, default=10, doc=doc_n_max_kappa),
        Argument(
            "mu_values",
            list,
            optional=True,
            default=["0", "1/2", "1", "3/2"],
            doc=doc_mu_values,
        ),
        Argument(
            "cutoff", int, optional=True, default=default_module_cutoff, doc=doc_cutoff
        ),
        Argument("gauges", int, optional=True, default=3, doc=doc_gauges),
        Argument("random_points", int, optional=True, default=5, doc=doc_random_points),
        Argument("seed", int, optional=True, default=0, doc=doc_seed),
        Argument(
            "params",
            dict,
            lattice_params_args(),
            optional=True,
            default=None,
            doc=doc_params,
        ),
    ]


def normalize_sweep_config(data):
    defs = sweep_args()
    base = Argument("base", dict, defs)
    data = base.normalize_value(data, trim_pattern="_*")
    base.check_value(data, strict=True)
    return data


def gen_doc(*, make_anchor=True, make_link=True, **kwargs):
    if make_link:
        make_anchor = True
    base = Argument("sweep", dict, sweep_args())
    return base.gen_doc(make_anchor=make_anchor, make_link=make_link, **kwargs)
