import init, { params_report, good_grid, repair_demo } from "./pkg/lmc_wasm.js";

const $ = (id) => document.getElementById(id);
const num = (id) => Number($(id).value);

function fail(target, e) {
  target.innerHTML = "";
  const span = document.createElement("span");
  span.className = "err";
  span.textContent = String(e);
  target.appendChild(span);
}

function runParams() {
  try {
    const r = JSON.parse(params_report(num("p-ell"), num("p-ellr"), num("p-ells")));
    $("p-out").textContent = JSON.stringify(r, null, 2);
  } catch (e) {
    fail($("p-out"), e);
  }
}

const COLORS = { good: "#2a7", oracle: "#8cf", bad: "#e66" };

function runGrid() {
  const canvas = $("g-canvas");
  const ctx = canvas.getContext("2d");
  let g;
  try {
    g = JSON.parse(good_grid(num("g-ell"), num("g-ellr"), num("g-ells")));
  } catch (e) {
    return fail($("g-summary"), e);
  }
  const n = g.extent;
  const cell = canvas.width / n;
  ctx.fillStyle = "#eee";
  ctx.fillRect(0, 0, canvas.width, canvas.height);
  for (const [a, b, cls] of g.cells) {
    ctx.fillStyle = COLORS[cls];
    ctx.fillRect(a * cell, canvas.height - (b + 1) * cell, Math.max(cell - 0.5, 1), Math.max(cell - 0.5, 1));
  }
  const bound = g.bound < 0 ? `${g.bound.toFixed(1)} (vacuous)` : g.bound.toFixed(1);
  $("g-summary").textContent =
    `q=${g.params.q} r=${g.params.r} s=${g.params.s} d=${g.params.d}: ` +
    `${g.oracle_count} good (${g.fast_count} certified by the fast rule) of ${g.cells.length} type-r; lower bound ${bound}`;
}

const erased = new Set();
let lastRepair = null;

function repairGeometry() {
  const q = 1 << num("r-ell");
  const canvas = $("r-canvas");
  return { q, canvas, cell: canvas.width / q };
}

function drawRepair() {
  const { q, canvas, cell } = repairGeometry();
  const ctx = canvas.getContext("2d");
  ctx.fillStyle = "#fff";
  ctx.fillRect(0, 0, canvas.width, canvas.height);
  const support = new Set();
  if (lastRepair) for (const r of lastRepair.repairs) for (const [x, y] of r.support) support.add(`${x},${y}`);
  for (let x = 0; x < q; x++) {
    for (let y = 0; y < q; y++) {
      const key = `${x},${y}`;
      ctx.fillStyle = erased.has(key) ? "#e66" : support.has(key) ? "#8cf" : "#f4f4f4";
      ctx.fillRect(x * cell + 1, canvas.height - (y + 1) * cell + 1, cell - 2, cell - 2);
      if (lastRepair && cell >= 20) {
        ctx.fillStyle = "#333";
        ctx.font = `${Math.floor(cell / 2.5)}px monospace`;
        ctx.fillText(lastRepair.values[x * q + y], x * cell + cell / 4, canvas.height - y * cell - cell / 3);
      }
    }
  }
}

function runRepair() {
  const coords = [...erased].flatMap((k) => k.split(",").map(Number));
  try {
    lastRepair = JSON.parse(repair_demo(num("r-ell"), num("r-ellr"), BigInt(num("r-seed")), new Uint16Array(coords)));
  } catch (e) {
    lastRepair = null;
    drawRepair();
    return fail($("r-summary"), e);
  }
  const p = lastRepair.params;
  const groups = lastRepair.repairs.map((r) => `(${r.point}) via group ${r.group}, ${r.agreeing_groups} clean groups agree`);
  $("r-summary").textContent =
    `q=${p.q} r=${p.r} t=${p.t}, ${lastRepair.message_elements} message symbols; ` +
    `repair ${lastRepair.exact ? "exact" : "MISMATCH"}. ${groups.join("; ")}`;
  drawRepair();
}

$("r-canvas").addEventListener("click", (ev) => {
  const { q, canvas, cell } = repairGeometry();
  const rect = canvas.getBoundingClientRect();
  const x = Math.floor((ev.clientX - rect.left) / cell);
  const y = Math.floor((canvas.height - (ev.clientY - rect.top)) / cell);
  if (x < 0 || y < 0 || x >= q || y >= q) return;
  const key = `${x},${y}`;
  erased.has(key) ? erased.delete(key) : erased.add(key);
  lastRepair = null;
  drawRepair();
});

$("r-clear").addEventListener("click", () => {
  erased.clear();
  lastRepair = null;
  drawRepair();
});
$("r-ell").addEventListener("change", () => $("r-clear").click());

await init();
$("p-run").addEventListener("click", runParams);
$("g-run").addEventListener("click", runGrid);
$("r-run").addEventListener("click", runRepair);
runParams();
runGrid();
drawRepair();
