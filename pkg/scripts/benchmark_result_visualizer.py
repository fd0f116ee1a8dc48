import argparse
from pathlib import Path

import matplotlib.pyplot as plt
import pandas as pd

HERE = Path(__file__).absolute().parent
DEFAULT_CSV_PATH = HERE / 'benchmark' / 'result.csv'


def visualize(csv_path: Path):
	df = pd.read_csv(csv_path)

	funcs = df['func'].unique()
	num_funcs = len(funcs)
	if num_funcs == 0:
		raise ValueError(f'No rows found in CSV: {csv_path}')

	subplot_width = 8
	subplot_height = subplot_width / 1.5
	fig, axes = plt.subplots(
		1, num_funcs,
		figsize=(subplot_width * num_funcs, subplot_height),
		dpi=150,
		squeeze=False,
	)
	axes = axes.ravel()

	for ax, func_name in zip(axes, funcs):
		group = df[df['func'] == func_name]
		ax.set_title(func_name, fontsize=16, fontweight='bold')
		ax.set_xlabel('n', fontsize=14)
		ax.set_ylabel('ms', fontsize=14)

		for (model, impl), line_group in group.groupby(['model', 'impl']):
			line_group = line_group.sort_values('n')
			ax.plot(
				line_group['n'],
				line_group['cost_ms'],
				marker='o',
				markersize=8,
				linewidth=2,
				label=f'{model} ({impl})',
			)

		ax.legend(fontsize=12)
		ax.set_yscale('log')
		ax.set_xticks(sorted(group['n'].unique()))
		ax.tick_params(axis='both', labelsize=12)
		ax.grid(True, alpha=0.3, linestyle='--')

	plt.tight_layout()
	plt.show()


def main():
	parser = argparse.ArgumentParser(formatter_class=argparse.ArgumentDefaultsHelpFormatter)
	parser.add_argument('--csv', type=Path, default=DEFAULT_CSV_PATH)
	args = parser.parse_args()

	visualize(args.csv)


if __name__ == '__main__':
	main()
