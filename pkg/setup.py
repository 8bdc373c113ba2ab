"""Module Setup File for PIP Installation."""

import pathlib

from setuptools import find_packages, setup

HERE = pathlib.Path(__file__).parent
README = (HERE / "README.md").read_text()

setup(
    name="pyhasse",
    version_format="{tag}",
    license="Apache License 2.0",
    description="Certify Hasse principle violations among prime quadratic twists.",
    long_description=README,
    long_description_content_type="text/markdown",
    packages=find_packages(include=["pyhasse", "pyhasse.*"]),
    zip_safe=False,
    include_package_data=True,
    platforms="any",
    use_scm_version=True,
    setup_requires=["setuptools_scm"],
    install_requires=[
        "colorlog>=6.6.0",
        "numpy>=1.22",
        "sympy>=1.13",
    ],
    entry_points={"console_scripts": ["pyhasse = pyhasse.__main__:main"]},
    keywords=["number theory", "hasse principle", "modular curves", "shimura curves"],
    classifiers=[
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: Apache Software License",
        "Operating System :: OS Independent",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
