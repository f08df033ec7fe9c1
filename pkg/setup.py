import setuptools

from pathlib import Path
this_directory = Path(__file__).parent
long_description = (this_directory / "readme.md").read_text()

setuptools.setup(
    name="cycleduality",
    version="0.1.0",
    description="Certifying homomorphism tests into alternating oriented cycles and the dualities around them",
    long_description=long_description,
    long_description_content_type="text/markdown",
    packages=setuptools.find_packages(exclude=["tests", "tests.*", "examples", "examples.*"]),
    classifiers=[
        "Programming Language :: Python :: 3",
        "License :: OSI Approved :: Apache Software License",
        "Development Status :: 3 - Alpha",
        "Operating System :: OS Independent",
    ],
    python_requires='>=3.7',
    install_requires=["networkx", "ortools"],
    extras_require={"test": ["pytest", "hypothesis"]},
    entry_points={"console_scripts": ["cycleduality=cycleduality.Cli:main"]}
)
