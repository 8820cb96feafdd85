#include "svcdep/ingest.hpp"

#include "svcdep/error.hpp"

#include <fcntl.h>
#include <fnmatch.h>
#include <spawn.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <cstdlib>
#include <system_error>

extern char** environ;

namespace fs = std::filesystem;

namespace svcdep {

ProcessResult run_process(const std::vector<std::string>& argv, const std::optional<fs::path>& cwd) {
    if (argv.empty()) {
        throw Error(ErrorKind::Io, "run_process: empty argv");
    }
    int pipefd[2];
    if (pipe(pipefd) != 0) {
        throw Error(ErrorKind::Io, "pipe() failed");
    }
    posix_spawn_file_actions_t actions;
    posix_spawn_file_actions_init(&actions);
    posix_spawn_file_actions_addclose(&actions, pipefd[0]);
    posix_spawn_file_actions_adddup2(&actions, pipefd[1], STDOUT_FILENO);
    posix_spawn_file_actions_adddup2(&actions, pipefd[1], STDERR_FILENO);
    posix_spawn_file_actions_addclose(&actions, pipefd[1]);
    posix_spawn_file_actions_addopen(&actions, STDIN_FILENO, "/dev/null", O_RDONLY, 0);
    if (cwd) {
        posix_spawn_file_actions_addchdir_np(&actions, cwd->c_str());
    }

    std::vector<char*> args;
    args.reserve(argv.size() + 1);
    for (const auto& a : argv) {
        args.push_back(const_cast<char*>(a.c_str()));
    }
    args.push_back(nullptr);

    pid_t pid = 0;
    const int rc = posix_spawnp(&pid, args[0], &actions, nullptr, args.data(), environ);
    posix_spawn_file_actions_destroy(&actions);
    close(pipefd[1]);
    if (rc != 0) {
        close(pipefd[0]);
        throw Error(ErrorKind::Io, "cannot execute " + argv[0] + ": " + std::generic_category().message(rc));
    }

    ProcessResult result;
    std::array<char, 4096> buf{};
    for (;;) {
        const ssize_t n = read(pipefd[0], buf.data(), buf.size());
        if (n > 0) {
            result.output.append(buf.data(), static_cast<std::size_t>(n));
        } else if (n == 0 || errno != EINTR) {
            break;
        }
    }
    close(pipefd[0]);

    int status = 0;
    while (waitpid(pid, &status, 0) < 0 && errno == EINTR) {
    }
    result.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

// ---------------------------------------------------------------------------

SourceTree::SourceTree(SourceTree&& other) noexcept
    : root_(std::move(other.root_)),
      revision_(std::move(other.revision_)),
      temporary_(other.temporary_),
      kept_(other.kept_) {
    other.temporary_ = false;
}

SourceTree& SourceTree::operator=(SourceTree&& other) noexcept {
    if (this != &other) {
        release();
        root_ = std::move(other.root_);
        revision_ = std::move(other.revision_);
        temporary_ = other.temporary_;
        kept_ = other.kept_;
        other.temporary_ = false;
    }
    return *this;
}

SourceTree::~SourceTree() { release(); }

void SourceTree::release() noexcept {
    if (temporary_ && !kept_ && !root_.empty()) {
        std::error_code ec;
        fs::remove_all(root_.parent_path(), ec);
    }
    temporary_ = false;
}

bool looks_like_git_url(const std::string& source) {
    static constexpr std::array<std::string_view, 5> prefixes{"http://", "https://", "git@", "ssh://",
                                                              "git://"};
    for (auto p : prefixes) {
        if (source.rfind(p, 0) == 0) {
            return true;
        }
    }
    return source.rfind("file://", 0) == 0 || (source.size() > 4 && source.ends_with(".git") &&
                                                !fs::is_directory(source));
}

namespace {

fs::path make_temp_dir() {
    std::string tmpl = (fs::temp_directory_path() / "svcdep-XXXXXX").string();
    if (mkdtemp(tmpl.data()) == nullptr) {
        throw Error(ErrorKind::Ingest, "cannot create temporary directory");
    }
    return fs::path(tmpl);
}

std::string first_line(const std::string& text) {
    auto nl = text.find('\n');
    return nl == std::string::npos ? text : text.substr(0, nl);
}

} // namespace

SourceTree fetch_repository(const std::string& source, const std::optional<std::string>& revision) {
    const bool remote = looks_like_git_url(source);
    if (!remote) {
        std::error_code ec;
        if (!fs::is_directory(source, ec)) {
            throw Error(ErrorKind::Ingest, "source not found or not a directory: " + source);
        }
        if (!revision) {
            return SourceTree(fs::path(source), std::string(kUnversioned), false);
        }
    }

    // Clone into <tmp>/checkout so the parent can be removed wholesale.
    const fs::path tmp = make_temp_dir();
    const fs::path checkout = tmp / "checkout";
    SourceTree tree(checkout, revision.value_or(std::string(kUnversioned)), true);

    std::vector<std::string> clone{"git", "clone", "--quiet"};
    if (!revision) {
        clone.emplace_back("--depth=1");
    }
    clone.push_back(source);
    clone.push_back(checkout.string());
    auto cloned = run_process(clone);
    if (cloned.exitCode != 0) {
        throw Error(ErrorKind::Ingest, "git clone failed for " + source + ": " + first_line(cloned.output));
    }
    if (revision) {
        auto checked = run_process({"git", "-c", "advice.detachedHead=false", "checkout", "--quiet",
                                    *revision},
                                   checkout);
        if (checked.exitCode != 0) {
            throw Error(ErrorKind::Revision,
                        "unknown revision '" + *revision + "': " + first_line(checked.output));
        }
    }
    return tree;
}

// ---------------------------------------------------------------------------

namespace {

bool excluded(const std::string& name, const DiscoveryConfig& config) {
    return std::any_of(config.excludeGlobs.begin(), config.excludeGlobs.end(), [&](const std::string& g) {
        return fnmatch(g.c_str(), name.c_str(), FNM_PERIOD) == 0 || fnmatch(g.c_str(), name.c_str(), 0) == 0;
    });
}

std::optional<fs::path> find_manifest(const fs::path& dir, const DiscoveryConfig& config) {
    for (const auto& m : config.manifests) {
        std::error_code ec;
        if (fs::is_regular_file(dir / m, ec)) {
            return dir / m;
        }
    }
    return std::nullopt;
}

std::vector<fs::path> sorted_subdirs(const fs::path& dir) {
    std::vector<fs::path> out;
    std::error_code ec;
    for (fs::directory_iterator it(dir, ec), end; !ec && it != end; it.increment(ec)) {
        std::error_code sec;
        if (it->is_directory(sec) && !it->is_symlink(sec)) {
            out.push_back(it->path());
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Returns true when at least one service was found at or below `dir`.
bool walk(const fs::path& dir, int depth, const DiscoveryConfig& config, std::vector<ServiceRoot>& found) {
    bool any = false;
    for (const auto& sub : sorted_subdirs(dir)) {
        if (excluded(sub.filename().string(), config)) {
            continue;
        }
        if (auto manifest = find_manifest(sub, config)) {
            found.push_back(ServiceRoot{ServiceId{sub.filename().string(), 0}, sub, *manifest});
            any = true;
        } else if (depth < config.maxDepth) {
            any = walk(sub, depth + 1, config, found) || any;
        }
    }
    return any;
}

bool has_any_file(const fs::path& dir) {
    std::error_code ec;
    for (fs::recursive_directory_iterator it(dir, ec), end; !ec && it != end; it.increment(ec)) {
        std::error_code sec;
        if (it->is_regular_file(sec)) {
            return true;
        }
    }
    return false;
}

} // namespace

Discovery discover_services(const fs::path& root, const DiscoveryConfig& config) {
    std::error_code ec;
    if (!fs::is_directory(root, ec)) {
        throw Error(ErrorKind::Ingest, "not a directory: " + root.string());
    }
    Discovery result;
    for (const auto& sub : sorted_subdirs(root)) {
        if (excluded(sub.filename().string(), config)) {
            continue;
        }
        if (auto manifest = find_manifest(sub, config)) {
            result.services.push_back(ServiceRoot{ServiceId{sub.filename().string(), 0}, sub, *manifest});
        } else if ((config.maxDepth <= 1 || !walk(sub, 2, config, result.services)) && has_any_file(sub)) {
            result.skipped.push_back(sub.filename().string());
        }
    }
    if (result.services.empty()) {
        throw Error(ErrorKind::EmptySystem, "no services found under " + root.string());
    }
    std::stable_sort(result.services.begin(), result.services.end(),
                     [](const ServiceRoot& a, const ServiceRoot& b) { return a.id.name < b.id.name; });
    for (std::size_t i = 1; i < result.services.size(); ++i) {
        if (result.services[i].id.name == result.services[i - 1].id.name) {
            throw Error(ErrorKind::Ingest, "duplicate service name '" + result.services[i].id.name + "' at " +
                                               result.services[i].rootDir.string());
        }
    }
    int ordinal = 1;
    for (auto& s : result.services) {
        s.id.ordinal = ordinal++;
    }
    return result;
}

} // namespace svcdep
