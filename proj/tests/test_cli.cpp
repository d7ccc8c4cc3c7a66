#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out, err;
};

fs::path workDir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "hgo_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

CliResult run(const std::string& args) {
  fs::path out = workDir() / "stdout.txt", err = workDir() / "stderr.txt";
  std::string cmd = std::string(HGO_CLI_PATH) + " " + args + " > " + out.string() + " 2> " +
                    err.string();
  int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

fs::path writeFile(const std::string& name, const std::string& content) {
  fs::path p = workDir() / name;
  std::ofstream(p) << content;
  return p;
}

fs::path six() {
  return writeFile("six.hg",
                   "n 6 directed 0\n"
                   "e 0 1 1\ne 0 2 1\ne 1 2 1\ne 2 3 1\ne 2 4 1\ne 4 5 1\n");
}

fs::path cacheArg() {
  fs::path dir = workDir() / "cache";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("canonical prints the expected keys") {
  fs::path file = six();
  CliResult r = run("canonical " + file.string());
  CHECK(r.code == 0);
  CHECK(r.out == "0,0,0,0,1,0,0,0,0,0,0,0,0,1,0,1,0,1,1,1,0\n");

  // anchored form; regression value frozen from the reference search
  CliResult o = run("canonical " + file.string() + " --ref 4");
  CHECK(o.code == 0);
  CHECK(o.out == "0,1,0,0,0,0,0,0,0,0,0,0,0,1,0,1,0,1,1,1,0\n");

  fs::path empty3 = writeFile("empty3.hg", "n 3 directed 0\n");
  CliResult e = run("canonical " + empty3.string());
  CHECK(e.code == 0);
  CHECK(e.out == "0,0,0,0,0,0\n");
}

TEST_CASE("generate emits catalogs in the store format") {
  CliResult r = run("generate -n 4 --vcolors 1 --ecolors 1 --cache-dir " + cacheArg().string());
  CHECK(r.code == 0);
  CHECK(r.out.rfind("# hgo-catalog v1 directed=0 kind=g n=4 vc=1 ec=1 conn=0 count=11\n", 0) == 0);
  CHECK(r.out.find("\n0,0,0,0,0,0,0,0,0,0\n") != std::string::npos);

  CliResult o = run("generate -n 4 --orbits --connected --cache-dir " + cacheArg().string());
  CHECK(o.code == 0);
  // first four orbit keys
  CHECK(o.out.find("0,0,0,0,0,0,1,1,1,0\n0,0,0,0,1,0,1,1,1,0\n0,0,0,1,0,0,0,1,1,0\n0,0,0,1,0,0,1,1,1,0\n") != std::string::npos);

  CliResult d = run("generate -n 3 --directed --cache-dir " + cacheArg().string());
  CHECK(d.code == 0);
  CHECK(d.out.find("count=16\n") != std::string::npos);

  // identical invocations produce identical bytes (warm cache second time)
  CliResult again = run("generate -n 4 --vcolors 1 --ecolors 1 --cache-dir " + cacheArg().string());
  CHECK(again.out == r.out);

  // --out writes the same content to a file
  fs::path outFile = workDir() / "catalog.cat";
  CliResult w = run("generate -n 4 --out " + outFile.string() + " --cache-dir " + cacheArg().string());
  CHECK(w.code == 0);
  CHECK(w.out.empty());
  CHECK(slurp(outFile) == r.out);
}

TEST_CASE("count output forms") {
  fs::path k3 = writeFile("k3.hg", "n 3 directed 0\ne 0 1 1\ne 1 2 1\ne 0 2 1\n");
  CliResult r = run("count " + k3.string() + " --ref 0 -k 3 --connected --cache-dir " +
                    cacheArg().string());
  CHECK(r.code == 0);
  CHECK(r.out == "2:1\ntotal=1\n");

  CliResult dense = run("count " + k3.string() + " --ref 0 -k 3 --connected --dense --cache-dir " +
                        cacheArg().string());
  CHECK(dense.out == "0:0\n1:0\n2:1\ntotal=1\n");

  fs::path p4 = writeFile("p4.hg", "n 4 directed 0\ne 0 1 1\ne 1 2 1\ne 2 3 1\n");
  CliResult pr = run("count " + p4.string() + " --ref 0 -k 3 --connected --cache-dir " +
                     cacheArg().string());
  CHECK(pr.code == 0);
  CHECK(pr.out == "0:1\ntotal=1\n");

  CliResult gl = run("count " + p4.string() + " --graphlets -k 3 --cache-dir " +
                     cacheArg().string());
  CHECK(gl.code == 0);
  CHECK(gl.out.find("total=4\n") != std::string::npos);

  CliResult jobs = run("count " + p4.string() + " --ref 0 -k 3 --connected --jobs 3 --cache-dir " +
                       cacheArg().string());
  CHECK(jobs.out == pr.out);
}

TEST_CASE("timing goes to the diagnostic stream") {
  fs::path k3 = writeFile("k3.hg", "n 3 directed 0\ne 0 1 1\ne 1 2 1\ne 0 2 1\n");
  CliResult r = run("canonical " + k3.string() + " --time");
  CHECK(r.code == 0);
  CHECK(r.out == "0,1,0,1,1,0\n");
  CHECK(r.err.find("time:") != std::string::npos);
}

TEST_CASE("exit codes: parse, validation, guard, cache corruption") {
  CliResult missing = run("canonical " + (workDir() / "nope.hg").string());
  CHECK(missing.code == 2);
  CHECK(missing.err.find("error:") != std::string::npos);

  fs::path bad = writeFile("bad.hg", "n 3 directed 0\ne 0 1 oops\n");
  CHECK(run("canonical " + bad.string()).code == 2);

  fs::path k3 = writeFile("k3.hg", "n 3 directed 0\ne 0 1 1\ne 1 2 1\ne 0 2 1\n");
  CliResult badRef = run("count " + k3.string() + " --ref 9 -k 3 --cache-dir " +
                         cacheArg().string());
  CHECK(badRef.code == 3);
  CHECK(badRef.err.find("VertexOutOfRange") != std::string::npos);

  CliResult kbig = run("count " + k3.string() + " --ref 0 -k 5 --cache-dir " + cacheArg().string());
  CHECK(kbig.code == 3);
  CHECK(kbig.err.find("KExceedsOrder") != std::string::npos);

  fs::path colored = writeFile("colored.hg", "n 3 directed 0\nv 0 2\ne 0 1 1\n");
  CliResult palette = run("count " + colored.string() + " --ref 0 -k 2 --vcolors 2 --cache-dir " +
                          cacheArg().string());
  CHECK(palette.code == 3);
  CHECK(palette.err.find("ColorOutOfBounds") != std::string::npos);

  CliResult guard = run("generate -n 7 --cache-dir " + cacheArg().string());
  CHECK(guard.code == 4);
  CHECK(guard.err.find("--max-order") != std::string::npos);

  CliResult noRef = run("count " + k3.string() + " -k 3 --cache-dir " + cacheArg().string());
  CHECK(noRef.code == 3);

  fs::path corruptDir = workDir() / "corrupt_cache";
  fs::create_directories(corruptDir);
  std::ofstream(corruptDir / "u_g_n3_v1_e1_all.cat") << "# hgo-catalog v1 directed=0 kind=g n=3 vc=1 ec=1 conn=0 count=4\n0,0,0\n";
  CliResult corrupt = run("generate -n 3 --cache-dir " + corruptDir.string());
  CHECK(corrupt.code == 5);
  CHECK(corrupt.err.find("CorruptCatalog") != std::string::npos);
}

TEST_CASE("guard override flag") {
  // order 6 is above the default guard but fine when raised
  CliResult r = run("generate -n 6 --max-order 6 --cache-dir " + cacheArg().string());
  CHECK(r.code == 0);
  CHECK(r.out.find("count=156\n") != std::string::npos);  // unlabeled graphs on 6 vertices
}
