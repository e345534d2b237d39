package com.acme.shop.catalog;

public class ProductSearch {
    private Product product;
    private Category category;
    private ReviewScore reviewScore;

    public ProductSearch(Product product, Category category, ReviewScore reviewScore) {
        this.product = product;
        this.category = category;
        this.reviewScore = reviewScore;
    }

    public int matchCount() {
        return 7;
    }

    public Product product() {
        return product;
    }
}
