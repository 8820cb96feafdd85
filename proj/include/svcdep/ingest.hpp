#pragma once

#include "svcdep/model.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace svcdep {

struct ProcessResult {
    int exitCode = -1;
    std::string output; // stdout and stderr interleaved
};

// Runs argv[0] from PATH without a shell.
ProcessResult run_process(const std::vector<std::string>& argv,
                          const std::optional<std::filesystem::path>& cwd = std::nullopt);

// A checked-out source tree. Temporary checkouts are deleted on destruction
// unless keep() was called.
class SourceTree {
public:
    SourceTree() = default;
    SourceTree(std::filesystem::path root, std::string revision, bool temporary)
        : root_(std::move(root)), revision_(std::move(revision)), temporary_(temporary) {}
    SourceTree(const SourceTree&) = delete;
    SourceTree& operator=(const SourceTree&) = delete;
    SourceTree(SourceTree&& other) noexcept;
    SourceTree& operator=(SourceTree&& other) noexcept;
    ~SourceTree();

    const std::filesystem::path& root() const noexcept { return root_; }
    const std::string& revision() const noexcept { return revision_; }
    bool temporary() const noexcept { return temporary_; }
    void keep() noexcept { kept_ = true; }

private:
    void release() noexcept;

    std::filesystem::path root_;
    std::string revision_;
    bool temporary_ = false;
    bool kept_ = false;
};

bool looks_like_git_url(const std::string& source);

// Local directories pass through unless a revision is requested, in which
// case the repository is cloned to a temp dir and checked out there.
SourceTree fetch_repository(const std::string& source, const std::optional<std::string>& revision);

struct DiscoveryConfig {
    std::vector<std::string> manifests{"pom.xml", "build.gradle", "build.gradle.kts"};
    std::vector<std::string> excludeGlobs{".*", "target", "build", "node_modules"};
    int maxDepth = 2;
};

struct ServiceRoot {
    ServiceId id;
    std::filesystem::path rootDir;
    std::filesystem::path manifestPath;
};

struct Discovery {
    std::vector<ServiceRoot> services;
    // Top-level directories that hold files but no recognized manifest.
    std::vector<std::string> skipped;
};

// Throws EmptySystem when nothing is found.
Discovery discover_services(const std::filesystem::path& root, const DiscoveryConfig& config);

} // namespace svcdep
