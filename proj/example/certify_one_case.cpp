// Certify one maximal case and print a short summary.
//
//   certify_one_case [case-id] [depth]

#include "momcert.hpp"

#include <cstdio>
#include <cstdlib>

int main(int argc, char** argv)
{
    int id = argc > 1 ? std::atoi(argv[1]) : 1;
    int depth = argc > 2 ? std::atoi(argv[2]) : 9;
    if (id < 1 || id > 18 || depth < 1 || depth > 20) {
        std::fprintf(stderr, "usage: certify_one_case [1-18] [depth 1-20]\n");
        return 2;
    }

    momcert::CaseSpec cs = momcert::case_by_id(id);
    momcert::Strategy s;
    s.depth = depth;

    std::size_t passed = 0;
    momcert::LeafObserver count = [&](const momcert::Box&, momcert::LeafKind k, double) {
        passed += k == momcert::LeafKind::passed;
    };
    momcert::CaseReport r = momcert::certify_case(cs, momcert::default_domain(), s, &count);

    std::printf("case %d %s\n", cs.id, cs.str().c_str());
    std::printf("  status     %s\n", momcert::to_string(r.status));
    std::printf("  boxes      %llu evaluated, %zu accepted leaves, %llu discarded\n",
                static_cast<unsigned long long>(r.boxes_processed), passed,
                static_cast<unsigned long long>(r.boxes_discarded));
    std::printf("  min bound  %.9f (threshold %.3f)\n", r.min_lower_bound, s.threshold);
    for (const momcert::Box& b : r.failures)
        std::printf("  failed on  e2=[%g, %g] e3=[%g, %g] e4=[%g, %g]\n", b.e2.lo, b.e2.hi, b.e3.lo, b.e3.hi, b.e4.lo,
                    b.e4.hi);
    return r.passed() ? 0 : 1;
}
