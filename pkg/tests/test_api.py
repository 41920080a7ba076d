# tests/test_api.py
from database.models import SolveJob
from services.job_manager import process_single_job
from services.scheduler import process_pending_jobs
from services.utils import get_smart_title

TOY = "// Toy increment\nnv = nu+1;\nassert(nv==2);\n"


def test_health(client):
    assert client.get("/health").json() == {"status": "alive"}


# --- SYNCHRONOUS SOLVING ---
def test_solve(client):
    response = client.post("/api/v1/solve", json={"spec_text": TOY})
    assert response.status_code == 200
    body = response.json()
    assert body["status"] == "SAT" and body["exit_code"] == 0
    assert body["models"] == [["nu=1;"]]
    assert body["assignments"] == [{"nu": 1}]


def test_solve_all_models(client):
    response = client.post("/api/v1/solve", json={"spec_text": "assert(nX < 3);", "width": 2,
                                                  "mode": "all-models"})
    body = response.json()
    assert sorted(a["nX"] for a in body["assignments"]) == [0, 1, 2]
    assert body["complete"] is True


def test_solve_unsat(client):
    body = client.post("/api/v1/solve", json={"spec_text": "assert(nu * 2 == 1);"}).json()
    assert body["status"] == "UNSAT" and body["exit_code"] == 20


def test_solve_rejects_a_bad_program_with_its_location(client):
    response = client.post("/api/v1/solve", json={"spec_text": "nA = 1;\nnB = nA / 2;"})
    assert response.status_code == 400
    detail = response.json()["detail"]
    assert detail["stage"] == "lexer"
    assert (detail["line"], detail["col"]) == (2, 9)


def test_solve_validates_the_request(client):
    assert client.post("/api/v1/solve", json={"spec_text": ""}).status_code == 422
    assert client.post("/api/v1/solve", json={"spec_text": TOY, "width": 0}).status_code == 422


def test_dimacs_export(client):
    response = client.post("/api/v1/dimacs", json={"spec_text": TOY, "width": 4})
    assert response.status_code == 200
    assert response.text.startswith("c name nu 1 2 3 4\np cnf ")
    plain = client.post("/api/v1/dimacs", json={"spec_text": TOY, "width": 4, "include_names": False})
    assert plain.text.startswith("p cnf ")


# --- QUEUED JOBS ---
def test_job_lifecycle(client, db_session):
    response = client.post("/api/v1/jobs", json={"spec_text": TOY})
    assert response.status_code == 201
    job = response.json()
    assert job["status"] == "pending"
    assert job["title"] == "Toy increment"

    pending = client.get("/api/v1/jobs/pending").json()
    assert [j["id"] for j in pending] == [job["id"]]

    process_single_job(job["id"])
    finished = client.get(f"/api/v1/jobs/{job['id']}").json()
    assert finished["status"] == "sat"
    assert "nu=1;" in finished["report"]
    assert "c variables" in finished["report"]
    assert finished["finished_at"] is not None
    assert client.get("/api/v1/jobs/pending").json() == []


def test_unknown_job(client):
    assert client.get("/api/v1/jobs/999999").status_code == 404


def test_failed_program_ends_in_error_status(db_session):
    job = SolveJob(title="broken", spec_text="nA = ;", width=8, mode="solve", status="pending")
    db_session.add(job)
    db_session.commit()

    process_single_job(job.id)
    db_session.refresh(job)
    assert job.status == "error"
    assert job.error.startswith("parser error at 1:")


def test_dimacs_job_stores_the_cnf(db_session):
    job = SolveJob(title="cnf", spec_text=TOY, width=2, mode="dimacs-only", status="pending")
    db_session.add(job)
    db_session.commit()

    process_single_job(job.id)
    db_session.refresh(job)
    assert job.status == "dimacs"
    assert job.report.startswith("p cnf ")


def test_finished_jobs_are_not_rerun(db_session):
    job = SolveJob(title="done", spec_text=TOY, width=8, mode="solve", status="sat", report="kept")
    db_session.add(job)
    db_session.commit()

    process_single_job(job.id)
    db_session.refresh(job)
    assert job.report == "kept"


def test_scheduler_drains_pending_jobs_in_order(db_session):
    jobs = [SolveJob(title=f"job {i}", spec_text=TOY, width=8, mode="solve", status="pending") for i in range(2)]
    db_session.add_all(jobs)
    db_session.commit()

    process_pending_jobs()
    for job in jobs:
        db_session.refresh(job)
        assert job.status == "sat"
    assert jobs[0].finished_at <= jobs[1].finished_at


# --- CORPUS ---
def test_list_corpus(client):
    cases = {c["id"]: c for c in client.get("/api/v1/corpus").json()}
    assert cases["toy-increment"]["expected_status"] == "SAT"
    assert cases["lcg-seed"]["slow"] is True
    assert cases["verify-clique-cover-broken"]["knobs"] == {"nV": 3, "nK_clique": 2}


def test_run_corpus_case(client):
    body = client.post("/api/v1/corpus/toy-increment/run").json()
    assert body["passed"] is True
    assert body["report"]["models"] == [["nu=1;"]]

    small = client.post("/api/v1/corpus/verify-clique-cover/run", json={"knobs": {"nV": 3, "nK_clique": 2}})
    assert small.json()["passed"] is True


def test_run_corpus_case_errors(client):
    assert client.post("/api/v1/corpus/no-such-case/run").status_code == 404
    response = client.post("/api/v1/corpus/toy-increment/run", json={"knobs": {"nV": 3}})
    assert response.status_code == 400
    assert response.json()["detail"]["stage"] == "corpus"


# --- TITLES ---
def test_smart_titles():
    assert get_smart_title("/*** Specification of instance ***/\nnV = 3;") == "Specification of instance"
    assert get_smart_title("\n\nnv = nu+1;\nassert(nv==2);") == "nv = nu+1;"
    assert get_smart_title("   ") == "Untitled program"
    long_title = get_smart_title("// " + "x" * 100, max_length=20)
    assert long_title == "x" * 17 + "..."
