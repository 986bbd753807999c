// Times the OpenMP table builder against the sequential reference on the
// same inputs and reports the speedup.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <string>

#include "alcove/fusion.hpp"
#include "alcove/parallel.hpp"
#include "alcove/root_datum.hpp"

namespace {

double time_ms(const std::function<void()>& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace alcove;
  std::string family = argc > 1 ? argv[1] : "A";
  int rank = argc > 2 ? std::atoi(argv[2]) : 2;
  i64 l = argc > 3 ? std::atoll(argv[3]) : 7;
  std::string kind_name = argc > 4 ? argv[4] : "VR_MINUS";
  int reps = argc > 5 ? std::atoi(argv[5]) : 3;

  try {
    RootDatum datum = build_root_datum(family_from_string(family), rank);
    TableKind kind = table_kind_from_string(kind_name);

    std::cout << "table " << kind_name << " for " << datum.name() << " at l=" << l
              << ", " << max_threads() << " thread(s), best of " << reps << "\n";

    FusionTable parallel_table, serial_table;
    double best_parallel = 1e300, best_serial = 1e300;
    for (int r = 0; r < reps; ++r) {
      best_parallel = std::min(
          best_parallel, time_ms([&] { parallel_table = build_table(datum, l, kind); }));
      best_serial = std::min(
          best_serial, time_ms([&] { serial_table = build_table_serial(datum, l, kind); }));
    }

    std::cout << "parallel " << best_parallel << " ms\n"
              << "serial   " << best_serial << " ms\n"
              << "speedup  " << best_serial / best_parallel << "x\n"
              << "agree    " << (parallel_table == serial_table ? "yes" : "NO") << "\n";
    return parallel_table == serial_table ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
