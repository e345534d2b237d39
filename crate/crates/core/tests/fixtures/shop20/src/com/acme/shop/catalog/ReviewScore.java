package com.acme.shop.catalog;

public class ReviewScore {
    private Product product;

    public ReviewScore(Product product) {
        this.product = product;
    }

    public int starRating() {
        return 4;
    }

    public Product product() {
        return product;
    }
}
