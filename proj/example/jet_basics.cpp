// Affine 1-jets over a box: build inputs, evaluate a bound, read the range.

#include "momcert.hpp"

#include <cstdio>

using momcert::Jet;

static void show(const char* name, const Jet& f)
{
    momcert::Interval r = momcert::range(f);
    std::printf("%-22s center %.12f  lin (%.3g, %.3g, %.3g)  eps %.3g  range [%.12f, %.12f]\n", name, f.center(),
                f.coeff(0), f.coeff(1), f.coeff(2), f.eps(), r.lo, r.hi);
}

int main()
{
    // e2 in [1.2, 1.25] on axis 1, e3 in [1.3, 1.35] on axis 2
    Jet e2 = momcert::jet_from_interval(1, 1.2, 1.25);
    Jet e3 = momcert::jet_from_interval(2, 1.3, 1.35);
    show("e2", e2);
    show("e3", e3);

    show("e2 * e3", e2 * e3);
    show("1 / e2", Jet(1.0) / e2);
    show("log(e2)", momcert::log(e2));
    show("min(e2, e3)", momcert::min(e2, e3));
    show("max0(e3 - 1.32)", momcert::max0(e3 - Jet(1.32)));

    // decimal constants are enclosed, not rounded
    show("1.5152", momcert::lit<Jet>("1.5152"));

    // a whole bound: f1 for case 5 over a box
    Jet e4 = momcert::jet_from_interval(3, 1.4, 1.45);
    momcert::SpectrumPoint<Jet> pt{e2, e3, e4};
    show("f1 (case 5)", momcert::f1(momcert::case_by_id(5), pt));

    try {
        momcert::log(momcert::jet_from_interval(1, -0.5, 0.5));
    } catch (const momcert::log_domain_error& e) {
        std::printf("log over [-0.5, 0.5]: %s\n", e.what());
    }
    return 0;
}
