import argparse
import csv
import time
from pathlib import Path
from types import ModuleType
from typing import Callable, Dict, List

import numpy as np

from permball import config
from permball.common import Model
from permball.models import DistanceEngine
from permball.permutation import Permutation

HERE = Path(__file__).absolute().parent
DEFAULT_BENCHMARK_DIR = HERE / 'benchmark'


def load_kernels() -> Dict[str, ModuleType]:
	from permball import py
	kernels: Dict[str, ModuleType] = {'py': py}
	try:
		from permball import cy
		kernels['cy'] = cy
	except ImportError:
		print('Cython kernel is not built, benchmarking the pure python kernel only')
	return kernels


def init_benchmark_dir(benchmark_dir: Path):
	benchmark_dir.mkdir(parents=True, exist_ok=True)
	gitignore_file = benchmark_dir / '.gitignore'
	if not gitignore_file.exists():
		gitignore_file.write_text('**\n')


def random_permutations(n: int, count: int, seed: int) -> List[Permutation]:
	rng = np.random.default_rng(seed)
	return [Permutation((rng.permutation(n) + 1).tolist()) for _ in range(count)]


def sweep_levels(kernel: ModuleType, n: int, radius: int, prefix_only: bool) -> int:
	frontier = {kernel.identity_word(n)}
	seen = set(frontier)
	for _ in range(radius):
		frontier = kernel.expand_frontier(frontier, n, prefix_only, seen)
		if not frontier:
			break
	return len(seen)


def measure_time_cost(func: Callable[[], None], round_cnt: int) -> float:
	start_time = time.perf_counter()
	for _ in range(round_cnt):
		func()
	return (time.perf_counter() - start_time) / round_cnt


def benchmark(output_csv_path: Path, lengths: List[int], radius: int, queries: int, seed: int):
	kernels = load_kernels()
	limits = config.Limits(max(lengths))

	with open(output_csv_path, 'w', encoding='utf8', newline='') as f:
		writer = csv.DictWriter(f, fieldnames=['n', 'model', 'impl', 'func', 'cost_ms', 'states'])
		writer.writeheader()

		for n in lengths:
			samples = random_permutations(n, queries, seed)
			for model in Model:
				prefix_only = model is Model.PTD
				for impl_name, kernel in kernels.items():
					states = sweep_levels(kernel, n, radius, prefix_only)
					cost_sec = measure_time_cost(lambda: sweep_levels(kernel, n, radius, prefix_only), 3)
					row = {'n': n, 'model': model.value, 'impl': impl_name, 'func': f'ball_r{radius}', 'cost_ms': round(cost_sec * 1000, 6), 'states': states}
					print(row)
					writer.writerow(row)

				# the engine runs on whichever kernel permball picked at import time
				def run_queries():
					engine = DistanceEngine(model, limits)
					for p in samples:
						engine.distance(p)

				cost_sec = measure_time_cost(run_queries, 1)
				row = {'n': n, 'model': model.value, 'impl': 'engine', 'func': 'distance', 'cost_ms': round(cost_sec / queries * 1000, 6), 'states': queries}
				print(row)
				writer.writerow(row)


def main():
	parser = argparse.ArgumentParser(formatter_class=argparse.ArgumentDefaultsHelpFormatter)
	parser.add_argument('--lengths', type=int, nargs='+', default=[6, 7, 8, 9])
	parser.add_argument('--radius', type=int, default=3)
	parser.add_argument('--queries', type=int, default=20)
	parser.add_argument('--seed', type=int, default=0)
	parser.add_argument('--output-csv', type=Path, default=DEFAULT_BENCHMARK_DIR / 'result.csv')
	args = parser.parse_args()

	init_benchmark_dir(args.output_csv.parent)
	benchmark(args.output_csv, args.lengths, args.radius, args.queries, args.seed)


if __name__ == '__main__':
	main()
