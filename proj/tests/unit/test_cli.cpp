// Process-level checks of the rn-spectra binary: exit codes and the
// gen -> analyze round trip. Invoked as: test_cli <path-to-rn-spectra>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++g_failures;
    std::cerr << "FAIL: " << what << "\n";
  }
}

int run(const std::string& cmd) {
  const int status = std::system((cmd + " >/dev/null 2>&1").c_str());
  if (status == -1) return -1;
  return WEXITSTATUS(status);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: test_cli <rn-spectra-binary>\n";
    return 2;
  }
  const std::string cli = std::string("'") + argv[1] + "'";
  const fs::path dir = fs::temp_directory_path() / "rnspectra_cli_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const fs::path fixture = dir / "fixture.dat";
  const fs::path out = dir / "out";

  expect(run(cli + " --help") == 0, "--help exits 0");
  expect(run(cli) == 1, "missing subcommand exits 1");
  expect(run(cli + " frobnicate") == 1, "unknown subcommand exits 1");
  expect(run(cli + " analyze") == 1, "analyze without arguments exits 1");
  expect(run(cli + " analyze /nonexistent.dat --n 8 --dx sample") == 1,
         "missing input file exits 1");

  expect(run(cli + " gen two-stage --step 0.05 -o '" + fixture.string() + "'") == 0,
         "gen two-stage exits 0");
  expect(fs::exists(fixture), "gen wrote the fixture");

  expect(run(cli + " analyze '" + fixture.string() + "' --n 16 --dx sample --out '" +
             out.string() + "'") == 0,
         "analyze exits 0");
  for (const char* name : {"RN_interpolated.dat", "EV_RN_interpolated.dat",
                           "QQf_QQ_spectrum.dat", "QQdf_QQ_spectrum.dat",
                           "QQdfbyparts_QQ_spectrum.dat", "QQdf_QQf_spectrum.dat"})
    expect(fs::exists(out / name), std::string("analyze wrote ") + name);

  expect(run(cli + " analyze '" + fixture.string() + "' --n 0 --dx sample") == 1,
         "n out of range exits 1");
  expect(run(cli + " analyze '" + fixture.string() + "' --n 8 --dx bogus") == 1,
         "bad dx mode exits 1");

  // two rows cannot support n=16: the Gram matrix is singular
  {
    std::ofstream tiny(dir / "tiny.dat");
    tiny << "0\t1\n1\t0.5\n";
  }
  expect(run(cli + " analyze '" + (dir / "tiny.dat").string() + "' --n 16 --dx sample --out '" +
             out.string() + "'") == 2,
         "singular Gram matrix exits 2");

  // malformed numeric data
  {
    std::ofstream bad(dir / "bad.dat");
    bad << "0\t1\nnot_a_number\t2\n";
  }
  expect(run(cli + " analyze '" + (dir / "bad.dat").string() + "' --n 4 --dx sample") == 1,
         "malformed input exits 1");

  fs::remove_all(dir);
  if (g_failures == 0) {
    std::cout << "test_cli: all checks passed\n";
    return 0;
  }
  std::cout << "test_cli: " << g_failures << " checks failed\n";
  return 1;
}
