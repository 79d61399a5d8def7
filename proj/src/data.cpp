#include "ddrc/data.hpp"

#include "ddrc/errors.hpp"
#include "ddrc/io.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <json.hpp>

#include <sstream>

namespace ddrc::data {

Eigen::MatrixXd TrajectoryData::input_disturbance_stack() const {
    Eigen::MatrixXd s(u.rows() + w.rows(), u.cols());
    s.topRows(u.rows()) = u;
    s.bottomRows(w.rows()) = w;
    return s;
}

void TrajectoryData::validate() const {
    if (u.cols() < 1)
        throw DataError("trajectory is empty");
    if (y.cols() != u.cols() || w.cols() != u.cols())
        throw DataError("trajectory signals have mismatched lengths");
}

TrajectoryData load_trajectory(const std::filesystem::path& path,
                               Eigen::Index n_u, Eigen::Index n_y, Eigen::Index n_w) {
    if (n_u < 1 || n_y < 1 || n_w < 1)
        throw ConfigError("signal dimensions must be positive");
    const std::string text = io::read_file(path);
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line))
        throw DataError(path.string() + ": empty file");

    // Header check keeps dimension mismatches from silently reshuffling
    // columns.
    std::vector<std::string> header = io::split_csv_line(line);
    const std::size_t expect_cols = 1 + static_cast<std::size_t>(n_u + n_y + n_w);
    if (header.size() != expect_cols)
        throw DataError(path.string() + ": expected " + std::to_string(expect_cols) +
                        " columns, found " + std::to_string(header.size()));
    if (header[0] != "t")
        throw DataError(path.string() + ": first column must be t");
    std::size_t k = 1;
    auto check_block = [&](const std::string& name, Eigen::Index n) {
        for (Eigen::Index i = 0; i < n; ++i, ++k) {
            const std::string want = name + "_" + std::to_string(i);
            if (header[k] != want)
                throw DataError(path.string() + ": expected column " + want +
                                ", found " + header[k]);
        }
    };
    check_block("u", n_u);
    check_block("y", n_y);
    check_block("w", n_w);

    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::vector<std::string> fields = io::split_csv_line(line);
        if (fields.size() != expect_cols)
            throw DataError(path.string() + ": row " + std::to_string(rows.size()) +
                            " has " + std::to_string(fields.size()) + " fields");
        std::vector<double> vals(expect_cols);
        for (std::size_t i = 0; i < expect_cols; ++i)
            vals[i] = io::parse_double(fields[i], path.string() + " row " +
                                                      std::to_string(rows.size()));
        const auto t = static_cast<double>(rows.size());
        if (vals[0] != t)
            throw DataError(path.string() + ": non-consecutive time index at row " +
                            std::to_string(rows.size()));
        rows.push_back(std::move(vals));
    }
    if (rows.empty())
        throw DataError(path.string() + ": no data rows");

    const auto T = static_cast<Eigen::Index>(rows.size());
    TrajectoryData data;
    data.u.resize(n_u, T);
    data.y.resize(n_y, T);
    data.w.resize(n_w, T);
    for (Eigen::Index t = 0; t < T; ++t) {
        const std::vector<double>& r = rows[static_cast<std::size_t>(t)];
        std::size_t c = 1;
        for (Eigen::Index i = 0; i < n_u; ++i)
            data.u(i, t) = r[c++];
        for (Eigen::Index i = 0; i < n_y; ++i)
            data.y(i, t) = r[c++];
        for (Eigen::Index i = 0; i < n_w; ++i)
            data.w(i, t) = r[c++];
    }
    return data;
}

std::string trajectory_to_csv(const TrajectoryData& data) {
    data.validate();
    std::string out = "t";
    auto header_block = [&](const char* name, Eigen::Index n) {
        for (Eigen::Index i = 0; i < n; ++i) {
            out += ',';
            out += name;
            out += '_';
            out += std::to_string(i);
        }
    };
    header_block("u", data.n_u());
    header_block("y", data.n_y());
    header_block("w", data.n_w());
    out += '\n';
    for (Eigen::Index t = 0; t < data.length(); ++t) {
        out += std::to_string(t);
        for (Eigen::Index i = 0; i < data.n_u(); ++i)
            out += ',' + io::format_double(data.u(i, t));
        for (Eigen::Index i = 0; i < data.n_y(); ++i)
            out += ',' + io::format_double(data.y(i, t));
        for (Eigen::Index i = 0; i < data.n_w(); ++i)
            out += ',' + io::format_double(data.w(i, t));
        out += '\n';
    }
    return out;
}

void save_trajectory(const std::filesystem::path& path, const TrajectoryData& data) {
    io::write_file(path, trajectory_to_csv(data));
}

Eigen::MatrixXd build_hankel(const Eigen::MatrixXd& signal, Eigen::Index order) {
    const Eigen::Index n = signal.rows();
    const Eigen::Index T = signal.cols();
    if (order < 1)
        throw ConfigError("hankel order must be positive");
    if (T < order)
        throw DataError("trajectory too short for hankel order " + std::to_string(order));
    Eigen::MatrixXd H(order * n, T - order + 1);
    for (Eigen::Index j = 0; j < H.cols(); ++j)
        for (Eigen::Index b = 0; b < order; ++b)
            H.block(b * n, j, n, 1) = signal.col(j + b);
    return H;
}

PersistencyReport check_persistency(const Eigen::MatrixXd& signal, Eigen::Index order) {
    const Eigen::MatrixXd H = build_hankel(signal, order);
    PersistencyReport rep;
    rep.required_rank = H.rows();
    if (H.cols() < H.rows())
        return rep; // wide matrix needed; rank stays 0 levels below required
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(H);
    const Eigen::VectorXd& sv = svd.singularValues();
    rep.largest_sv = sv.size() > 0 ? sv(0) : 0.0;
    const double tol = 1e-9 * rep.largest_sv;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) >= tol && sv(i) > 0.0) {
            ++rep.rank;
            rep.smallest_accepted_sv = sv(i);
        }
    }
    rep.exciting = rep.rank == rep.required_rank;
    return rep;
}

PersistencyReport check_persistency(const TrajectoryData& data, Eigen::Index order) {
    return check_persistency(data.input_disturbance_stack(), order);
}

Eigen::MatrixXd HankelSystem::past_stack() const {
    Eigen::MatrixXd s(u_past.rows() + y_past.rows() + w_past.rows(), u_past.cols());
    s.topRows(u_past.rows()) = u_past;
    s.middleRows(u_past.rows(), y_past.rows()) = y_past;
    s.bottomRows(w_past.rows()) = w_past;
    return s;
}

HankelSystem split_hankel(const TrajectoryData& data, Eigen::Index t_ini, Eigen::Index horizon) {
    if (t_ini < 1 || horizon < 1)
        throw ConfigError("t_ini and horizon must be positive");
    data.validate();
    const Eigen::Index order = t_ini + horizon;
    auto split = [&](const Eigen::MatrixXd& signal, Eigen::MatrixXd& past, Eigen::MatrixXd& future) {
        const Eigen::MatrixXd H = build_hankel(signal, order);
        past = H.topRows(t_ini * signal.rows());
        future = H.bottomRows(horizon * signal.rows());
    };
    HankelSystem sys;
    sys.t_ini = t_ini;
    sys.horizon = horizon;
    split(data.u, sys.u_past, sys.u_future);
    split(data.y, sys.y_past, sys.y_future);
    split(data.w, sys.w_past, sys.w_future);
    return sys;
}

EmpiricalMoments estimate_moments(const Eigen::MatrixXd& w) {
    const Eigen::Index T = w.cols();
    if (T < 2)
        throw DataError("moment estimation needs at least 2 samples");
    EmpiricalMoments m;
    m.mean = w.rowwise().mean();
    Eigen::MatrixXd centered = w.colwise() - m.mean;
    m.cov = (centered * centered.transpose()) / static_cast<double>(T - 1);
    m.cov = 0.5 * (m.cov + m.cov.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m.cov);
    if (eig.eigenvalues().minCoeff() <= 0.0)
        throw DataError("empirical covariance is not positive definite; record more data");
    return m;
}

std::string moments_to_json(const EmpiricalMoments& m) {
    nlohmann::json j;
    j["mean"] = std::vector<double>(m.mean.data(), m.mean.data() + m.mean.size());
    std::vector<std::vector<double>> cov;
    for (Eigen::Index r = 0; r < m.cov.rows(); ++r) {
        std::vector<double> row(m.cov.cols());
        for (Eigen::Index c = 0; c < m.cov.cols(); ++c)
            row[static_cast<std::size_t>(c)] = m.cov(r, c);
        cov.push_back(std::move(row));
    }
    j["cov"] = cov;
    return j.dump(2) + "\n";
}

EmpiricalMoments moments_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw DataError(std::string("moments json: ") + e.what());
    }
    if (!j.contains("mean") || !j.contains("cov"))
        throw DataError("moments json: missing mean or cov");
    EmpiricalMoments m;
    const auto mean = j["mean"].get<std::vector<double>>();
    m.mean = Eigen::Map<const Eigen::VectorXd>(mean.data(), static_cast<Eigen::Index>(mean.size()));
    const auto cov = j["cov"].get<std::vector<std::vector<double>>>();
    const auto n = static_cast<Eigen::Index>(cov.size());
    if (n != m.mean.size())
        throw DataError("moments json: mean and cov dimensions disagree");
    m.cov.resize(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        if (static_cast<Eigen::Index>(cov[static_cast<std::size_t>(r)].size()) != n)
            throw DataError("moments json: cov is not square");
        for (Eigen::Index c = 0; c < n; ++c)
            m.cov(r, c) = cov[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }
    return m;
}

} // namespace ddrc::data
